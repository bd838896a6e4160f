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

#include "girp/log.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <mutex>

#include "girp/error.hpp"

namespace girp::log {
namespace {

const auto kStart = std::chrono::steady_clock::now();
std::atomic<Level> g_level{Level::Warn};
std::mutex g_mutex;

}  // namespace

void set_level(Level lvl) { g_level.store(lvl); }
Level level() { return g_level.load(); }

Level parse_level(std::string_view name) {
  if (name == "debug") return Level::Debug;
  if (name == "info") return Level::Info;
  if (name == "warn") return Level::Warn;
  if (name == "error") return Level::Error;
  if (name == "off") return Level::Off;
  throw Error(ErrorCode::ConfigError, "unknown log level '" + std::string(name) + "'");
}

std::string_view level_name(Level lvl) {
  switch (lvl) {
    case Level::Debug: return "debug";
    case Level::Info: return "info";
    case Level::Warn: return "warn";
    case Level::Error: return "error";
    case Level::Off: return "off";
  }
  return "?";
}

void write(Level lvl, std::string_view message) {
  static constexpr const char* kTags[] = {"DEBUG", "INFO", "WARN", "ERROR", ""};
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - kStart).count();
  std::lock_guard lock(g_mutex);
  std::fprintf(stderr, "[%12.6f] %s %.*s\n", secs, kTags[static_cast<int>(lvl)],
               static_cast<int>(message.size()), message.data());
}

}  // namespace girp::log
