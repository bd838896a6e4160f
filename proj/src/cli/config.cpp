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

#include "girp/cli/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>

#include "girp/error.hpp"
#include "girp/wire/message.hpp"

namespace girp::cli {
namespace {

std::string trim(const std::string& s) {
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool known(const std::string& key) {
  for (const auto& k : config_keys()) {
    if (k.name == key) return true;
  }
  return false;
}

std::map<std::string, std::string> read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot read config file " + path);
  std::map<std::string, std::string> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    auto eq = line.find('=');
    std::string where = path + ":" + std::to_string(line_no);
    if (eq == std::string::npos) throw Error(ErrorCode::ConfigError, where + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    if (!known(key)) throw Error(ErrorCode::ConfigError, where + ": unknown key '" + key + "'");
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

}  // namespace

const std::vector<ConfigKey>& config_keys() {
  static const std::vector<ConfigKey> keys{
      {"listen", "GIRP_LISTEN", "127.0.0.1:47001", "address the server binds (host:port)"},
      {"server", "GIRP_SERVER", "127.0.0.1:47001", "server a client connects to (host:port)"},
      {"backend", "GIRP_BACKEND", "interp", "compute backend: interp or gpu"},
      {"heartbeat_interval_ms", "GIRP_HEARTBEAT_INTERVAL_MS", "100", "client heartbeat period"},
      {"miss_threshold", "GIRP_MISS_THRESHOLD", "3", "missed heartbeats before degrading"},
      {"max_frame_bytes", "GIRP_MAX_FRAME_BYTES", std::to_string(wire::kMaxPayload),
       "largest frame payload accepted or sent"},
      {"log_level", "GIRP_LOG_LEVEL", "info", "debug, info, warn, error or off"},
  };
  return keys;
}

std::string_view source_name(Source source) {
  switch (source) {
    case Source::Flag: return "flag";
    case Source::Env: return "env";
    case Source::File: return "file";
    case Source::Default: return "default";
  }
  return "?";
}

EnvLookup process_env() {
  return [](const std::string& name) -> std::optional<std::string> {
    const char* v = std::getenv(name.c_str());
    if (v == nullptr) return std::nullopt;
    return std::string(v);
  };
}

Config Config::resolve(const std::map<std::string, std::string>& flags, const EnvLookup& env,
                       std::optional<std::string> config_file) {
  for (const auto& [key, _] : flags) {
    if (!known(key)) throw Error(ErrorCode::ConfigError, "unknown setting '" + key + "'");
  }
  if (!config_file) config_file = env("GIRP_CONFIG");
  std::map<std::string, std::string> file;
  if (config_file && !config_file->empty()) file = read_file(*config_file);

  Config c;
  for (const auto& k : config_keys()) {
    Entry e{k.fallback, Source::Default};
    if (auto f = flags.find(k.name); f != flags.end()) {
      e = {f->second, Source::Flag};
    } else if (auto v = env(k.env)) {
      e = {*v, Source::Env};
    } else if (auto fv = file.find(k.name); fv != file.end()) {
      e = {fv->second, Source::File};
    }
    c.entries_[k.name] = e;
  }
  return c;
}

const std::string& Config::get(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) throw Error(ErrorCode::ConfigError, "unknown setting '" + key + "'");
  return it->second.value;
}

std::uint64_t Config::get_u64(const std::string& key) const {
  const std::string& text = get(key);
  std::uint64_t v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || end != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCode::ConfigError, key + " must be a non-negative integer, got '" + text + "'");
  }
  return v;
}

Source Config::source(const std::string& key) const {
  get(key);
  return entries_.at(key).source;
}

std::vector<std::string> Config::describe() const {
  std::vector<std::string> out;
  for (const auto& k : config_keys()) {
    const auto& e = entries_.at(k.name);
    out.push_back(k.name + "=" + e.value + " (" + std::string(source_name(e.source)) + ")");
  }
  return out;
}

}  // namespace girp::cli
