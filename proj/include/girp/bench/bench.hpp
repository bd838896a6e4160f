// Copyright 2026 The girp Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GIRP_BENCH_BENCH_HPP
#define GIRP_BENCH_BENCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "girp/digest.hpp"
#include "girp/executor/executor.hpp"
#include "girp/wire/transport.hpp"

namespace girp::bench {

enum class Scenario { ColdStart, FrameDraw, Migration, Rtt };

std::string_view scenario_name(Scenario scenario);  // "cold-start", "frame-draw", ...
/// Errors: InvalidArgument.
Scenario parse_scenario(std::string_view name);

struct Stats {
  std::size_t n = 0;
  double mean_ms = 0;
  double sd_ms = 0;  // sample SD, divisor n - 1
  double p99_ms = 0; // nearest rank: index ceil(0.99 n) - 1 of the ascending sort
  bool sd_defined = false;  // false when n < 2; sd_ms is then 0
};

/// Errors: Empty.
Stats stats(const std::vector<std::uint64_t>& samples_ns);

struct LatencyReport {
  Scenario scenario = Scenario::ColdStart;
  std::string phase;  // migration phase, empty otherwise
  std::vector<std::uint64_t> samples_ns;
  Stats stats;
  std::size_t failures = 0;  // iterations excluded from the distribution
  /// SHA-256 of the last output buffer; equal across runs with the same
  /// inputs regardless of timing.
  std::optional<Digest> output_digest;
  std::string note;
};

/// Fills in `stats`. Errors: Empty.
LatencyReport make_report(Scenario scenario, std::vector<std::uint64_t> samples_ns,
                          std::string phase = {});

struct BudgetModel {
  double refresh_hz = 120;
  double sync_ms = 1;
  double access_ms_uplink = 0.5;
  double access_ms_downlink = 0.5;

  /// 1000 / refresh_hz - sync_ms. Errors: InvalidModel unless positive.
  double device_budget_ms() const;
};

struct BudgetVerdict {
  double frame_interval_ms = 0;
  double sync_ms = 0;
  double device_budget_ms = 0;
  double access_ms = 0;
  double compute_budget_ms = 0;  // device budget minus both access delays
  double p99_ms = 0;
  double headroom_ms = 0;          // device budget minus p99
  double compute_headroom_ms = 0;  // compute budget minus p99
  bool fits = false;               // p99 within the compute budget
};

/// Errors: InvalidModel.
BudgetVerdict check_budget(const LatencyReport& report, const BudgetModel& model);
std::string render_budget(const BudgetVerdict& verdict, const BudgetModel& model);

// Published hardware figures printed beside measurements for comparison.
// They are constants, never measured here.
struct ExternalReference {
  Scenario scenario;
  std::string label;
  double mean_ms;
  std::optional<double> sd_ms;
  std::optional<double> p99_ms;
};

const std::vector<ExternalReference>& external_references();

/// Columns Scenario, Source, AVG, SD, 99th in milliseconds at one decimal.
/// The h264 decode baseline row is always present, tagged external.
std::string render_table(const std::vector<LatencyReport>& reports);

/// {scenario, [phase,] n, mean_ms, sd_ms, p99_ms, [failures,] [samples]}
/// with fixed key order.
std::string to_json(const LatencyReport& report, bool raw = false);
std::string to_json(const std::vector<LatencyReport>& reports, bool raw = false);

// Where a scenario runs: the in-process interpreter, or a served session.
struct Target {
  std::optional<wire::Endpoint> remote;
  exec::ExecutorOptions local;
};

struct RunOptions {
  std::size_t iterations = 1000;
  std::size_t warmup = 10;
};

/// Per iteration: create pipeline, upload inputs, dispatch 1024x1x1 over
/// 65,536 elements, read back. Module upload happens once, untimed.
LatencyReport run_cold_start(const Target& target, const RunOptions& options);

/// Per frame: dispatch and read back a width x height framebuffer on a warm
/// pipeline. Errors: Empty for zero frames, InvalidArgument unless both
/// dimensions are multiples of 8.
LatencyReport run_frame_draw(const Target& target, const RunOptions& options,
                             std::uint32_t width = 1280, std::uint32_t height = 720);

struct MigrationOptions {
  RunOptions run;
  std::uint64_t session_bytes = 256 * 1024;
  /// Corrupt one byte of every k-th snapshot in transit (0 = never).
  /// Refused cycles are retried, so each distribution still has
  /// `run.iterations` samples.
  std::size_t tamper_every = 0;
};

// Phases, per cycle:
//   export   = EXPORT_SESSION round trip against server A
//   import   = server-side import time reported in B's ACK
//   transfer = IMPORT_SESSION round trip minus the import time
//   total    = export + IMPORT_SESSION round trip
struct MigrationReport {
  LatencyReport export_phase;
  LatencyReport transfer;
  LatencyReport import_phase;
  LatencyReport total;
  std::uint64_t snapshot_bytes = 0;
  std::size_t rejected = 0;  // tampered snapshots refused by B
};

/// Populates a session on `a`, then repeatedly migrates it to `b`, each
/// import replacing the previous copy.
MigrationReport run_migration(const wire::Endpoint& a, const wire::Endpoint& b,
                              const MigrationOptions& options);

struct MigrationTiming {
  std::uint64_t export_ns = 0;
  std::uint64_t transfer_ns = 0;
  std::uint64_t import_ns = 0;
  std::uint64_t total_ns = 0;
  std::uint64_t snapshot_bytes = 0;
  std::uint64_t epoch = 0;  // epoch of the imported copy
};

/// Moves one existing session from `from` to `to`, keeping its id. Phases
/// as for run_migration. Errors: UnknownSession, Busy, IoError, and import
/// errors from `to`.
MigrationTiming migrate_session(const wire::Endpoint& from, const wire::Endpoint& to,
                                const wire::SessionId& session);

LatencyReport run_rtt(const wire::Endpoint& server, const RunOptions& options);

}  // namespace girp::bench

#endif  // GIRP_BENCH_BENCH_HPP
