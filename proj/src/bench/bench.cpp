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

#include "girp/bench/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "girp/error.hpp"
#include "girp/fixtures.hpp"
#include "girp/log.hpp"
#include "girp/wire/message.hpp"

namespace girp::bench {
namespace {

using Clock = std::chrono::steady_clock;
using wire::Millis;

constexpr std::uint32_t kColdStartGroups = 1024;

std::uint64_t elapsed_ns(Clock::time_point since) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - since).count());
}

double to_ms(double ns) { return ns / 1e6; }

Bytes u32_bytes(const std::vector<std::uint32_t>& values) {
  Bytes out(values.size() * 4);
  std::memcpy(out.data(), values.data(), out.size());
  return out;
}

std::string fixed1(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string lpad(std::string s, std::size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

// A served session driven with raw frames, so timings include nothing but
// the protocol exchange.
class Remote {
 public:
  Remote(const wire::Endpoint& endpoint, bool open_session)
      : channel_(wire::connect_tcp(endpoint)) {
    if (open_session) {
      session_ = call<wire::HelloAck>(wire::Hello{wire::ClientKind::Ue, 0x00010000, 0x00010600, "interp"})
                     .session;
    }
  }

  template <typename Response>
  Response call(const wire::Message& request, const wire::SessionId* session = nullptr) {
    std::uint64_t rid = next_++;
    channel_.send(request, session ? *session : session_, rid);
    wire::Frame f = channel_.receive(Millis(60000));
    if (const auto* err = std::get_if<wire::ErrorMsg>(&f.message)) {
      throw Error(error_from_wire(err->code).value_or(ErrorCode::UnexpectedMessage), err->message);
    }
    if (const auto* r = std::get_if<Response>(&f.message)) return *r;
    throw Error(ErrorCode::UnexpectedMessage, std::string(msg_type_name(wire::type_of(f.message))));
  }

  wire::FrameChannel& channel() { return channel_; }
  const wire::SessionId& session() const { return session_; }

 private:
  wire::FrameChannel channel_;
  wire::SessionId session_{};
  std::uint64_t next_ = 1;
};

void check_output(bool ok, std::string_view scenario) {
  if (!ok) throw Error(ErrorCode::ExecError, std::string(scenario) + " produced wrong output");
}

}  // namespace

std::string_view scenario_name(Scenario scenario) {
  switch (scenario) {
    case Scenario::ColdStart: return "cold-start";
    case Scenario::FrameDraw: return "frame-draw";
    case Scenario::Migration: return "migration";
    case Scenario::Rtt: return "rtt";
  }
  return "?";
}

Scenario parse_scenario(std::string_view name) {
  for (auto s : {Scenario::ColdStart, Scenario::FrameDraw, Scenario::Migration, Scenario::Rtt}) {
    if (name == scenario_name(s)) return s;
  }
  if (name == "migrate") return Scenario::Migration;
  throw Error(ErrorCode::InvalidArgument, "unknown scenario '" + std::string(name) + "'");
}

Stats stats(const std::vector<std::uint64_t>& samples_ns) {
  if (samples_ns.empty()) throw Error(ErrorCode::Empty, "no samples");
  Stats s;
  s.n = samples_ns.size();
  double sum = 0;
  for (auto v : samples_ns) sum += static_cast<double>(v);
  double mean = sum / static_cast<double>(s.n);
  s.mean_ms = to_ms(mean);
  if (s.n >= 2) {
    double sq = 0;
    for (auto v : samples_ns) sq += (static_cast<double>(v) - mean) * (static_cast<double>(v) - mean);
    s.sd_ms = to_ms(std::sqrt(sq / static_cast<double>(s.n - 1)));
    s.sd_defined = true;
  }
  std::vector<std::uint64_t> sorted = samples_ns;
  std::size_t rank = (99 * s.n + 99) / 100;  // ceil(0.99 n)
  std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(rank - 1), sorted.end());
  s.p99_ms = to_ms(static_cast<double>(sorted[rank - 1]));
  return s;
}

LatencyReport make_report(Scenario scenario, std::vector<std::uint64_t> samples_ns, std::string phase) {
  LatencyReport r;
  r.scenario = scenario;
  r.phase = std::move(phase);
  r.stats = stats(samples_ns);
  r.samples_ns = std::move(samples_ns);
  return r;
}

double BudgetModel::device_budget_ms() const {
  if (!(refresh_hz > 0)) throw Error(ErrorCode::InvalidModel, "refresh rate must be positive");
  if (sync_ms < 0 || access_ms_uplink < 0 || access_ms_downlink < 0) {
    throw Error(ErrorCode::InvalidModel, "delays must be non-negative");
  }
  double budget = 1000.0 / refresh_hz - sync_ms;
  if (!(budget > 0)) {
    throw Error(ErrorCode::InvalidModel, "no device budget left at " + fixed1(refresh_hz) + " Hz");
  }
  return budget;
}

BudgetVerdict check_budget(const LatencyReport& report, const BudgetModel& model) {
  BudgetVerdict v;
  v.device_budget_ms = model.device_budget_ms();
  v.frame_interval_ms = 1000.0 / model.refresh_hz;
  v.sync_ms = model.sync_ms;
  v.access_ms = model.access_ms_uplink + model.access_ms_downlink;
  v.compute_budget_ms = v.device_budget_ms - v.access_ms;
  v.p99_ms = report.stats.p99_ms;
  v.headroom_ms = v.device_budget_ms - v.p99_ms;
  v.compute_headroom_ms = v.compute_budget_ms - v.p99_ms;
  v.fits = v.compute_headroom_ms >= 0;
  return v;
}

std::string render_budget(const BudgetVerdict& v, const BudgetModel& model) {
  std::ostringstream os;
  auto row = [&](const std::string& label, double ms) {
    char num[400];
    std::snprintf(num, sizeof num, "%9.3f ms\n", ms);
    os << pad(label, 34) << " " << num;
  };
  std::ostringstream hz;
  hz << "frame interval at " << model.refresh_hz << " Hz";
  row(hz.str(), v.frame_interval_ms);
  row("- display sync", v.sync_ms);
  row("= device budget", v.device_budget_ms);
  row("- uplink access", model.access_ms_uplink);
  row("- downlink access", model.access_ms_downlink);
  row("= compute budget", v.compute_budget_ms);
  row("measured p99", v.p99_ms);
  row("headroom vs device budget", v.headroom_ms);
  row("headroom vs compute budget", v.compute_headroom_ms);
  os << "verdict: " << (v.fits ? "fits" : "exceeds") << " the compute budget\n";
  return os.str();
}

const std::vector<ExternalReference>& external_references() {
  static const std::vector<ExternalReference> refs{
      {Scenario::ColdStart, "RTX 2080", 0.7, 0.2, 1.4},
      {Scenario::ColdStart, "Jetson TX2", 1.8, 0.5, 4.3},
      {Scenario::FrameDraw, "RTX 2080", 0.39, 0.4, 2.2},
      {Scenario::FrameDraw, "Jetson TX2", 0.60, 0.4, 1.2},
      {Scenario::FrameDraw, "Samsung S7 h264 decode baseline", 8.3, 1.1, std::nullopt},
      {Scenario::Migration, "published total", 1.4, std::nullopt, std::nullopt},
  };
  return refs;
}

std::string render_table(const std::vector<LatencyReport>& reports) {
  constexpr std::size_t kScenario = 12, kNum = 8;
  std::size_t source_width = 48;
  for (const auto& ref : external_references()) {
    source_width = std::max(source_width, ref.label.size() + std::string_view(" [external reference]").size() + 2);
  }
  std::ostringstream os;
  os << pad("Scenario", kScenario) << pad("Source", source_width) << lpad("AVG", kNum) << lpad("SD", kNum)
     << lpad("99th", kNum) << "\n";
  auto row = [&](std::string_view scenario, const std::string& source, double mean,
                 std::optional<double> sd, std::optional<double> p99) {
    os << pad(std::string(scenario), kScenario) << pad(source, source_width) << lpad(fixed1(mean), kNum)
       << lpad(sd ? fixed1(*sd) : "-", kNum) << lpad(p99 ? fixed1(*p99) : "-", kNum) << "\n";
  };

  std::vector<Scenario> referenced;
  auto externals = [&](Scenario s) {
    if (std::find(referenced.begin(), referenced.end(), s) != referenced.end()) return;
    referenced.push_back(s);
    for (const auto& ref : external_references()) {
      if (ref.scenario == s) {
        row(scenario_name(s), ref.label + " [external reference]", ref.mean_ms, ref.sd_ms, ref.p99_ms);
      }
    }
  };

  for (const auto& r : reports) {
    std::string source = "measured";
    if (!r.phase.empty()) source += " " + r.phase;
    source += " (n=" + std::to_string(r.stats.n) + ")";
    row(scenario_name(r.scenario), source, r.stats.mean_ms,
        r.stats.sd_defined ? std::optional<double>(r.stats.sd_ms) : std::nullopt, r.stats.p99_ms);
    bool last_of_scenario = std::none_of(&r + 1, reports.data() + reports.size(),
                                         [&](const LatencyReport& o) { return o.scenario == r.scenario; });
    if (last_of_scenario) externals(r.scenario);
  }
  // The decode baseline is the comparison every table needs.
  if (std::find(referenced.begin(), referenced.end(), Scenario::FrameDraw) == referenced.end()) {
    for (const auto& ref : external_references()) {
      if (ref.label.find("h264") != std::string::npos) {
        row(scenario_name(ref.scenario), ref.label + " [external reference]", ref.mean_ms, ref.sd_ms,
            ref.p99_ms);
      }
    }
  }
  os << "times in ms; SD is the sample SD (n-1); 99th is nearest-rank\n";
  return os.str();
}

namespace {

nlohmann::ordered_json report_json(const LatencyReport& r, bool raw) {
  nlohmann::ordered_json j;
  j["scenario"] = scenario_name(r.scenario);
  if (!r.phase.empty()) j["phase"] = r.phase;
  j["n"] = r.stats.n;
  j["mean_ms"] = r.stats.mean_ms;
  j["sd_ms"] = r.stats.sd_ms;
  j["p99_ms"] = r.stats.p99_ms;
  if (r.failures != 0) j["failures"] = r.failures;
  if (raw) j["samples"] = r.samples_ns;
  return j;
}

}  // namespace

std::string to_json(const LatencyReport& report, bool raw) { return report_json(report, raw).dump(); }

std::string to_json(const std::vector<LatencyReport>& reports, bool raw) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_json(r, raw));
  return arr.dump();
}

LatencyReport run_cold_start(const Target& target, const RunOptions& options) {
  if (options.iterations == 0) throw Error(ErrorCode::Empty, "zero iterations");
  const std::uint32_t n = fixtures::kMultiplyElements;
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 0u);
  const Bytes a_in = u32_bytes(std::vector<std::uint32_t>(n, 3));
  const Bytes v_in = u32_bytes(v);
  const Bytes module = fixtures::bytes(fixtures::Kernel::Multiply);
  const Digest hash = sha256(module);

  std::vector<std::uint64_t> samples;
  samples.reserve(options.iterations);
  Bytes out;
  std::uint64_t upload_ns = 0;
  auto record = [&](std::size_t i, std::uint64_t ns) {
    if (i >= options.warmup) samples.push_back(ns);
  };

  if (target.remote) {
    Remote r(*target.remote, true);
    auto t = Clock::now();
    r.call<wire::ModuleAck>(wire::LoadModule{hash, module});
    upload_ns = elapsed_ns(t);
    r.call<wire::Ack>(wire::AllocBuffer{1, a_in.size()});
    r.call<wire::Ack>(wire::AllocBuffer{2, v_in.size()});
    for (std::size_t i = 0; i < options.warmup + options.iterations; ++i) {
      auto start = Clock::now();
      auto p = r.call<wire::PipelineAck>(wire::CreatePipeline{hash, "main"});
      r.call<wire::Ack>(wire::WriteBuffer{1, 0, a_in});
      r.call<wire::Ack>(wire::WriteBuffer{2, 0, v_in});
      r.call<wire::DispatchAck>(wire::Dispatch{p.pipeline_id, kColdStartGroups, 1, 1, {{0, 0, 1}, {0, 1, 2}}});
      out = r.call<wire::BufferData>(wire::ReadBuffer{2, 0, static_cast<std::uint32_t>(v_in.size())}).data;
      record(i, elapsed_ns(start));
    }
  } else {
    exec::InterpreterExecutor ex(target.local);
    auto t = Clock::now();
    ex.load(spirv::SpirvModule::from_bytes(module));
    upload_ns = elapsed_ns(t);
    for (std::size_t i = 0; i < options.warmup + options.iterations; ++i) {
      Bytes a = a_in, data = v_in;
      auto start = Clock::now();
      auto p = ex.create_pipeline(hash, "main");
      exec::BufferMap bound{{{0, 0}, std::span<std::uint8_t>(a)}, {{0, 1}, std::span<std::uint8_t>(data)}};
      ex.dispatch(p, {kColdStartGroups, 1, 1}, bound);
      out = data;
      record(i, elapsed_ns(start));
    }
  }

  std::vector<std::uint32_t> got(n);
  std::memcpy(got.data(), out.data(), std::min<std::size_t>(out.size(), got.size() * 4));
  bool ok = out.size() == v_in.size();
  for (std::uint32_t i = 0; ok && i < n; ++i) ok = got[i] == 3 * i;
  check_output(ok, "cold-start");

  auto report = make_report(Scenario::ColdStart, std::move(samples));
  report.output_digest = sha256(out);
  report.note = "module upload " + std::to_string(upload_ns) + " ns, untimed";
  return report;
}

LatencyReport run_frame_draw(const Target& target, const RunOptions& options, std::uint32_t width,
                             std::uint32_t height) {
  if (options.iterations == 0) throw Error(ErrorCode::Empty, "zero frames");
  if (width == 0 || height == 0 || width % 8 != 0 || height % 8 != 0) {
    throw Error(ErrorCode::InvalidArgument, "resolution must be a non-zero multiple of 8 in both axes");
  }
  const std::uint64_t fb_bytes = std::uint64_t{width} * height * 4;
  if (fb_bytes > wire::kMaxPayload - 64) {
    throw Error(ErrorCode::InvalidArgument, "framebuffer exceeds one frame payload");
  }
  const Bytes module = fixtures::bytes(fixtures::Kernel::Frame);
  const Digest hash = sha256(module);
  const exec::Groups groups{width / 8, height / 8, 1};

  std::vector<std::uint64_t> samples;
  samples.reserve(options.iterations);
  Bytes out;
  std::uint32_t last_frame = 0;
  const std::size_t total = options.warmup + options.iterations;

  if (target.remote) {
    Remote r(*target.remote, true);
    r.call<wire::ModuleAck>(wire::LoadModule{hash, module});
    auto p = r.call<wire::PipelineAck>(wire::CreatePipeline{hash, "main"}).pipeline_id;
    r.call<wire::Ack>(wire::AllocBuffer{1, 8});
    r.call<wire::Ack>(wire::AllocBuffer{2, fb_bytes});
    for (std::size_t i = 0; i < total; ++i) {
      last_frame = static_cast<std::uint32_t>(i);
      auto start = Clock::now();
      r.call<wire::Ack>(wire::WriteBuffer{1, 0, u32_bytes({width, last_frame})});
      r.call<wire::DispatchAck>(wire::Dispatch{p, groups.x, groups.y, 1, {{0, 0, 1}, {0, 1, 2}}});
      out = r.call<wire::BufferData>(wire::ReadBuffer{2, 0, static_cast<std::uint32_t>(fb_bytes)}).data;
      if (i >= options.warmup) samples.push_back(elapsed_ns(start));
    }
  } else {
    exec::InterpreterExecutor ex(target.local);
    ex.load(spirv::SpirvModule::from_bytes(module));
    auto p = ex.create_pipeline(hash, "main");
    Bytes fb(fb_bytes);
    for (std::size_t i = 0; i < total; ++i) {
      last_frame = static_cast<std::uint32_t>(i);
      auto start = Clock::now();
      Bytes params = u32_bytes({width, last_frame});
      exec::BufferMap bound{{{0, 0}, std::span<std::uint8_t>(params)}, {{0, 1}, std::span<std::uint8_t>(fb)}};
      ex.dispatch(p, groups, bound);
      out = fb;
      if (i >= options.warmup) samples.push_back(elapsed_ns(start));
    }
  }

  // Spot-check the last frame against the pattern.
  auto pixel = [&](std::uint32_t x, std::uint32_t y) {
    std::uint32_t v;
    std::memcpy(&v, out.data() + (std::uint64_t{y} * width + x) * 4, 4);
    return v;
  };
  bool ok = out.size() == fb_bytes;
  for (std::uint32_t y = 0; ok && y < height; y += height / 8) {
    for (std::uint32_t x = 0; ok && x < width; x += width / 8) {
      ok = pixel(x, y) == last_frame * 16777216u + y * 256u + x;
    }
  }
  check_output(ok, "frame-draw");

  auto report = make_report(Scenario::FrameDraw, std::move(samples));
  report.output_digest = sha256(out);
  report.note = std::to_string(width) + "x" + std::to_string(height);
  return report;
}

MigrationReport run_migration(const wire::Endpoint& a, const wire::Endpoint& b,
                              const MigrationOptions& options) {
  if (options.run.iterations == 0) throw Error(ErrorCode::Empty, "zero iterations");
  Remote source(a, true);
  Remote dest(b, false);

  if (options.session_bytes > 0) {
    const Bytes module = fixtures::bytes(fixtures::Kernel::Multiply);
    source.call<wire::ModuleAck>(wire::LoadModule{sha256(module), module});
    source.call<wire::PipelineAck>(wire::CreatePipeline{sha256(module), "main"});
    std::mt19937_64 rng(42);
    std::uint64_t half = options.session_bytes / 2;
    std::uint64_t id = 1;
    for (std::uint64_t size : {half, options.session_bytes - half}) {
      Bytes data(size);
      for (auto& x : data) x = static_cast<std::uint8_t>(rng());
      source.call<wire::Ack>(wire::AllocBuffer{id, size});
      source.call<wire::Ack>(wire::WriteBuffer{id, 0, data});
      ++id;
    }
  }

  std::vector<std::uint64_t> exp, xfer, imp, total;
  MigrationReport report;
  const wire::SessionId zero{};
  std::size_t valid = 0;
  for (std::size_t i = 0; valid < options.run.warmup + options.run.iterations; ++i) {
    auto t0 = Clock::now();
    Bytes snapshot = source.call<wire::SessionSnapshot>(wire::ExportSession{}).snapshot;
    std::uint64_t export_ns = elapsed_ns(t0);
    report.snapshot_bytes = snapshot.size();

    bool tamper = options.tamper_every != 0 && (i + 1) % options.tamper_every == 0;
    if (tamper) snapshot[snapshot.size() / 2] ^= 0x01;
    auto t1 = Clock::now();
    wire::Ack ack;
    try {
      ack = dest.call<wire::Ack>(wire::ImportSession{std::move(snapshot)}, &zero);
    } catch (const Error& e) {
      if (!tamper) throw;
      log::debug("tampered snapshot refused: ", e.what());
      ++report.rejected;
      continue;
    }
    std::uint64_t import_rtt = elapsed_ns(t1);
    if (tamper) throw Error(ErrorCode::DigestMismatch, "tampered snapshot was accepted");
    if (valid++ < options.run.warmup) continue;
    exp.push_back(export_ns);
    imp.push_back(ack.elapsed_ns);
    xfer.push_back(import_rtt > ack.elapsed_ns ? import_rtt - ack.elapsed_ns : 0);
    total.push_back(export_ns + import_rtt);
  }

  report.export_phase = make_report(Scenario::Migration, std::move(exp), "export");
  report.transfer = make_report(Scenario::Migration, std::move(xfer), "transfer");
  report.import_phase = make_report(Scenario::Migration, std::move(imp), "import");
  report.total = make_report(Scenario::Migration, std::move(total), "total");
  report.total.failures = report.rejected;
  return report;
}

MigrationTiming migrate_session(const wire::Endpoint& from, const wire::Endpoint& to,
                                const wire::SessionId& session) {
  Remote source(from, false);
  Remote dest(to, false);
  MigrationTiming t;
  auto t0 = Clock::now();
  Bytes snapshot = source.call<wire::SessionSnapshot>(wire::ExportSession{}, &session).snapshot;
  t.export_ns = elapsed_ns(t0);
  t.snapshot_bytes = snapshot.size();
  auto t1 = Clock::now();
  auto ack = dest.call<wire::Ack>(wire::ImportSession{std::move(snapshot)}, &session);
  std::uint64_t import_rtt = elapsed_ns(t1);
  t.import_ns = ack.elapsed_ns;
  t.transfer_ns = import_rtt > ack.elapsed_ns ? import_rtt - ack.elapsed_ns : 0;
  t.total_ns = t.export_ns + import_rtt;
  t.epoch = ack.value;
  return t;
}

LatencyReport run_rtt(const wire::Endpoint& server, const RunOptions& options) {
  if (options.iterations == 0) throw Error(ErrorCode::Empty, "zero iterations");
  Remote r(server, false);
  std::vector<std::uint64_t> samples;
  for (std::size_t i = 0; i < options.warmup + options.iterations; ++i) {
    std::uint64_t ns = wire::measure_rtt(r.channel(), r.session(), Millis(5000));
    if (i >= options.warmup) samples.push_back(ns);
  }
  return make_report(Scenario::Rtt, std::move(samples));
}

}  // namespace girp::bench
