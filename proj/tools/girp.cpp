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

// girp: one binary for both roles. `serve` is the edge server; `client`,
// `run`, `inspect`, `migrate` and `bench` are the device-side and operator
// tools.

#include <atomic>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>
#include <algorithm>
#include <map>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "girp/bench/bench.hpp"
#include "girp/cli/config.hpp"
#include "girp/client/client.hpp"
#include "girp/client/script.hpp"
#include "girp/error.hpp"
#include "girp/executor/executor.hpp"
#include "girp/log.hpp"
#include "girp/session/server.hpp"
#include "girp/spirv/module.hpp"

namespace {

using namespace girp;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::atomic<bool> g_stop{false};

void on_signal(int) { g_stop = true; }

Bytes read_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot open " + path);
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_binary(const std::string& path, const Bytes& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string part;
  std::istringstream is(s);
  while (std::getline(is, part, sep)) out.push_back(part);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::uint32_t parse_u32(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    unsigned long v = std::stoul(s, &used, 0);
    if (used == s.size() && v <= UINT32_MAX) return static_cast<std::uint32_t>(v);
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::ConfigError, what + ": '" + s + "' is not a 32-bit unsigned integer");
}

// Resolved settings plus the derived option structs every subcommand uses.
struct Settings {
  cli::Config config;

  wire::Endpoint listen() const { return wire::parse_endpoint(config.get("listen")); }
  wire::Endpoint server() const { return wire::parse_endpoint(config.get("server")); }
  exec::Backend backend() const { return exec::parse_backend(config.get("backend")); }

  std::uint32_t max_payload() const {
    std::uint64_t v = config.get_u64("max_frame_bytes");
    if (v == 0 || v > wire::kMaxPayload) {
      throw Error(ErrorCode::ConfigError,
                  "max_frame_bytes must be in [1, " + std::to_string(wire::kMaxPayload) + "]");
    }
    return static_cast<std::uint32_t>(v);
  }

  client::ClientOptions client_options() const {
    client::ClientOptions o;
    o.heartbeat.interval = wire::Millis(config.get_u64("heartbeat_interval_ms"));
    std::uint64_t misses = config.get_u64("miss_threshold");
    if (o.heartbeat.interval.count() == 0 || misses == 0 || misses > 1000) {
      throw Error(ErrorCode::ConfigError, "heartbeat interval and miss threshold must be positive");
    }
    o.heartbeat.miss_threshold = static_cast<int>(misses);
    o.max_payload = max_payload();
    return o;
  }
};

int cmd_inspect(const std::string& file) {
  auto module = spirv::SpirvModule::from_bytes(client::read_module_source(file, fs::current_path()));
  auto info = spirv::reflect(module);
  std::cout << "version: " << info.version.major << "." << info.version.minor << "\n";
  std::cout << "bound: " << info.bound << "\n";
  std::cout << "hash: " << module.content_hash().hex() << "\n";
  for (const auto& e : info.entry_points) {
    std::cout << "entry: " << e.name << " " << spirv::execution_model_name(e.execution_model);
    if (e.local_size) {
      std::cout << " local_size " << e.local_size->x << "," << e.local_size->y << "," << e.local_size->z;
    }
    std::cout << "\n";
  }
  std::cout << "bindings: " << info.bindings.size() << "\n";
  for (const auto& b : info.bindings) {
    std::cout << "binding: set " << b.slot.set << " binding " << b.slot.binding << " "
              << (b.kind == spirv::BindingKind::StorageBuffer ? "storage-buffer" : "other") << "\n";
  }
  return kExitOk;
}

struct RunArgs {
  std::string file;
  std::string entry = "main";
  std::string groups = "1,1,1";
  std::vector<std::string> buffers;
  bool parallel = false;
};

int cmd_run(const Settings& s, const RunArgs& a) {
  auto g = split(a.groups, ',');
  if (g.size() != 3) throw Error(ErrorCode::ConfigError, "--groups takes X,Y,Z");
  exec::Groups groups{parse_u32(g[0], "groups"), parse_u32(g[1], "groups"), parse_u32(g[2], "groups")};

  exec::ExecutorOptions options;
  options.parallel = a.parallel;
  auto executor = exec::make_executor(s.backend(), options);
  auto module = spirv::SpirvModule::from_bytes(client::read_module_source(a.file, fs::current_path()));
  auto pipeline = executor->create_pipeline(executor->load(module), a.entry);

  struct Bound {
    spirv::DescriptorSlot slot;
    std::string path;
    Bytes data;
  };
  std::vector<Bound> bound;
  for (const auto& arg : a.buffers) {
    auto parts = split(arg, ':');
    if (parts.size() < 3) throw Error(ErrorCode::ConfigError, "--buffer takes set:binding:file, got " + arg);
    std::string path = arg.substr(parts[0].size() + parts[1].size() + 2);
    bound.push_back({{parse_u32(parts[0], "set"), parse_u32(parts[1], "binding")}, path, read_binary(path)});
  }
  exec::BufferMap map;
  for (auto& b : bound) {
    if (!map.emplace(b.slot, std::span<std::uint8_t>(b.data)).second) {
      throw Error(ErrorCode::ConfigError, "slot bound twice");
    }
  }
  auto t = executor->dispatch(pipeline, groups, map);
  for (const auto& b : bound) write_binary(b.path, b.data);
  std::cout << "invocations: " << groups.count() * pipeline.local_size.count() << "\n";
  std::cout << "prepare_ns: " << t.prepare_ns << "\nexecute_ns: " << t.execute_ns
            << "\nreadback_ns: " << t.readback_ns << "\n";
  return kExitOk;
}

int cmd_serve(const Settings& s) {
  session::ServerOptions o;
  o.listen = s.listen();
  o.session.backend = s.backend();
  o.max_payload = s.max_payload();
  exec::make_executor(o.session.backend);  // fail now rather than on the first HELLO
  session::Server server(o);
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  server.start();
  // Scripts and tests read the bound port from here.
  std::cout << "listening " << o.listen.host << ":" << server.port() << std::endl;
  while (!g_stop) std::this_thread::sleep_for(std::chrono::milliseconds(50));
  log::info("shutting down");
  server.stop();
  return kExitOk;
}

int cmd_client_run(const Settings& s, const std::string& script_path) {
  std::ifstream script(script_path);
  if (!script) throw Error(ErrorCode::ConfigError, "cannot open script " + script_path);
  auto c = client::OffloadClient::connect(s.server(), s.client_options());
  log::info("connected to ", s.server().to_string(), " session ", to_hex(c->session()));
  auto base = fs::path(script_path).parent_path();
  auto stats = client::run_script(*c, script, base.empty() ? fs::current_path() : base, std::cout);
  for (const auto& e : c->drain_events()) {
    log::info("state ", client::state_name(e.from), " -> ", client::state_name(e.to), ": ", e.reason);
  }
  std::cout << "commands " << stats.commands << " remote_dispatches " << stats.remote_dispatches
            << " local_dispatches " << stats.local_dispatches << " final_state "
            << client::state_name(c->state()) << "\n";
  c->close();
  return kExitOk;
}

int cmd_migrate(const std::string& from, const std::string& to, const std::string& session_hex,
                bool json) {
  Bytes id = from_hex(session_hex);
  wire::SessionId sid{};
  if (id.size() != sid.size()) throw Error(ErrorCode::ConfigError, "--session takes 32 hex digits");
  std::copy(id.begin(), id.end(), sid.begin());
  auto t = bench::migrate_session(wire::parse_endpoint(from), wire::parse_endpoint(to), sid);
  auto ms = [](std::uint64_t ns) { return static_cast<double>(ns) / 1e6; };
  if (json) {
    nlohmann::ordered_json j;
    j["export_ms"] = ms(t.export_ns);
    j["transfer_ms"] = ms(t.transfer_ns);
    j["import_ms"] = ms(t.import_ns);
    j["total_ms"] = ms(t.total_ns);
    j["snapshot_bytes"] = t.snapshot_bytes;
    j["epoch"] = t.epoch;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "export_ms " << ms(t.export_ns) << "\ntransfer_ms " << ms(t.transfer_ns) << "\nimport_ms "
              << ms(t.import_ns) << "\ntotal_ms " << ms(t.total_ns) << "\nsnapshot_bytes "
              << t.snapshot_bytes << "\nepoch " << t.epoch << "\n";
  }
  return kExitOk;
}

struct BenchArgs {
  std::string scenario;
  std::string target = "local";
  std::string to;
  std::size_t iterations = 1000;
  std::size_t warmup = 10;
  std::uint32_t width = 1280;
  std::uint32_t height = 720;
  std::uint64_t session_bytes = 256 * 1024;
  bool json = false;
  bool table = false;
  bool raw = false;
  bool budget = false;
  double refresh_hz = 120;
  double sync_ms = 1;
};

// In-process loopback server for scenarios that need one when the target
// is local.
std::unique_ptr<session::Server> local_server() {
  auto s = std::make_unique<session::Server>(session::ServerOptions{wire::Endpoint{"127.0.0.1", 0}, {}});
  s->start();
  return s;
}

int cmd_bench(const Settings& s, const BenchArgs& a) {
  bench::Scenario scenario = bench::parse_scenario(a.scenario);
  bench::RunOptions run{a.iterations, a.warmup};
  log::info("bench ", bench::scenario_name(scenario), " target ", a.target, " iterations ", a.iterations,
            " warm-up ", a.warmup, " (discarded)");
  bool local = a.target == "local";
  bench::Target target;
  if (!local) target.remote = wire::parse_endpoint(a.target);
  target.local.parallel = false;

  std::vector<bench::LatencyReport> reports;
  std::vector<std::unique_ptr<session::Server>> servers;
  switch (scenario) {
    case bench::Scenario::ColdStart:
      reports.push_back(bench::run_cold_start(target, run));
      break;
    case bench::Scenario::FrameDraw:
      reports.push_back(bench::run_frame_draw(target, run, a.width, a.height));
      break;
    case bench::Scenario::Rtt: {
      wire::Endpoint ep = local ? wire::Endpoint{"127.0.0.1", (servers.push_back(local_server()), servers.back()->port())}
                                : *target.remote;
      reports.push_back(bench::run_rtt(ep, run));
      break;
    }
    case bench::Scenario::Migration: {
      wire::Endpoint from, to;
      if (local) {
        servers.push_back(local_server());
        servers.push_back(local_server());
        from = {"127.0.0.1", servers[0]->port()};
        to = {"127.0.0.1", servers[1]->port()};
      } else {
        if (a.to.empty()) throw Error(ErrorCode::ConfigError, "migration against remote servers needs --to");
        from = *target.remote;
        to = wire::parse_endpoint(a.to);
      }
      bench::MigrationOptions mo;
      mo.run = run;
      mo.session_bytes = a.session_bytes;
      auto m = bench::run_migration(from, to, mo);
      log::info("snapshot ", m.snapshot_bytes, " bytes");
      reports = {m.export_phase, m.transfer, m.import_phase, m.total};
      break;
    }
  }
  for (auto& srv : servers) srv->stop();
  (void)s;

  if (a.json) {
    std::cout << (reports.size() == 1 ? bench::to_json(reports[0], a.raw) : bench::to_json(reports, a.raw))
              << "\n";
  } else {
    std::cout << bench::render_table(reports);
  }
  if (a.budget) {
    bench::BudgetModel model;
    model.refresh_hz = a.refresh_hz;
    model.sync_ms = a.sync_ms;
    auto verdict = bench::check_budget(reports.back(), model);
    (a.json ? std::cerr : std::cout) << bench::render_budget(verdict, model);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"girp: SPIR-V compute offloading between a device and an edge server"};
  app.require_subcommand(1);
  app.fallthrough();

  std::map<std::string, std::string> flag_values;
  std::optional<std::string> config_file;
  app.add_option("--config", config_file, "key = value settings file (else $GIRP_CONFIG)");
  std::map<std::string, std::string> raw_flags;
  for (const auto& k : cli::config_keys()) {
    std::string flag = "--" + k.name;
    std::replace(flag.begin(), flag.end(), '_', '-');
    app.add_option(flag, raw_flags[k.name], k.help + " [" + k.env + ", default " + k.fallback + "]");
  }

  std::string inspect_file;
  auto* inspect = app.add_subcommand("inspect", "Reflect a SPIR-V module");
  inspect->add_option("file", inspect_file, "module file or fixture:NAME")->required();

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Execute a kernel locally over buffer files");
  run->add_option("file", run_args.file, "module file or fixture:NAME")->required();
  run->add_option("--entry", run_args.entry, "entry point")->capture_default_str();
  run->add_option("--groups", run_args.groups, "workgroup counts X,Y,Z")->capture_default_str();
  run->add_option("--buffer", run_args.buffers, "set:binding:file, rewritten in place")->take_all();
  run->add_flag("--parallel", run_args.parallel, "distribute workgroups with OpenMP");

  auto* serve = app.add_subcommand("serve", "Run the edge server until SIGINT or SIGTERM");

  std::string script_path;
  auto* client_cmd = app.add_subcommand("client", "Device-side runtime");
  client_cmd->require_subcommand(1);
  auto* client_run = client_cmd->add_subcommand("run", "Run a workload script against --server");
  client_run->add_option("script", script_path, "script file")->required();

  std::string mig_from, mig_to, mig_session;
  bool mig_json = false;
  auto* migrate = app.add_subcommand("migrate", "Move a live session between servers");
  migrate->add_option("--from", mig_from, "source server host:port")->required();
  migrate->add_option("--to", mig_to, "destination server host:port")->required();
  migrate->add_option("--session", mig_session, "session id, 32 hex digits")->required();
  migrate->add_flag("--json", mig_json, "print one JSON object");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Latency scenarios: cold-start, frame-draw, migrate, rtt");
  bench_cmd->add_option("scenario", bench_args.scenario, "cold-start | frame-draw | migrate | rtt")
      ->required()
      ->check(CLI::IsMember({"cold-start", "frame-draw", "migrate", "migration", "rtt"}));
  bench_cmd->add_option("--target", bench_args.target, "local, or a server host:port")->capture_default_str();
  bench_cmd->add_option("--to", bench_args.to, "second server for a remote migration run");
  bench_cmd->add_option("--iterations", bench_args.iterations, "measured runs")->capture_default_str();
  bench_cmd->add_option("--warmup", bench_args.warmup, "discarded runs before measuring")->capture_default_str();
  bench_cmd->add_option("--width", bench_args.width, "frame-draw width")->capture_default_str();
  bench_cmd->add_option("--height", bench_args.height, "frame-draw height")->capture_default_str();
  bench_cmd->add_option("--session-bytes", bench_args.session_bytes, "migrated buffer bytes")
      ->capture_default_str();
  auto* json_flag = bench_cmd->add_flag("--json", bench_args.json, "JSON output");
  bench_cmd->add_flag("--table", bench_args.table, "table output (default)")->excludes(json_flag);
  bench_cmd->add_flag("--raw", bench_args.raw, "include raw samples in JSON");
  bench_cmd->add_flag("--budget", bench_args.budget, "check p99 against the device latency budget");
  bench_cmd->add_option("--refresh-hz", bench_args.refresh_hz, "budget display rate")->capture_default_str();
  bench_cmd->add_option("--sync-ms", bench_args.sync_ms, "budget display sync")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitUsage;
  }

  try {
    for (const auto& [key, value] : raw_flags) {
      std::string flag = "--" + key;
      std::replace(flag.begin(), flag.end(), '_', '-');
      if (app.count(flag) > 0) flag_values[key] = value;
    }
    Settings s{cli::Config::resolve(flag_values, cli::process_env(), config_file)};
    log::set_level(log::parse_level(s.config.get("log_level")));
    for (const auto& line : s.config.describe()) log::info("config ", line);

    if (*inspect) return cmd_inspect(inspect_file);
    if (*run) return cmd_run(s, run_args);
    if (*serve) return cmd_serve(s);
    if (*client_run) return cmd_client_run(s, script_path);
    if (*migrate) return cmd_migrate(mig_from, mig_to, mig_session, mig_json);
    if (*bench_cmd) return cmd_bench(s, bench_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::ConfigError ? kExitUsage : kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
