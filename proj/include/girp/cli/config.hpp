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

#ifndef GIRP_CLI_CONFIG_HPP
#define GIRP_CLI_CONFIG_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace girp::cli {

struct ConfigKey {
  std::string name;        // file key; flag is --name with '_' as '-'
  std::string env;         // GIRP_NAME
  std::string fallback;
  std::string help;
};

/// Every configurable setting, in a fixed order.
const std::vector<ConfigKey>& config_keys();

enum class Source { Flag, Env, File, Default };
std::string_view source_name(Source source);

using EnvLookup = std::function<std::optional<std::string>(const std::string& name)>;

/// Reads the process environment.
EnvLookup process_env();

// Effective settings, resolved per key as flag > GIRP_* variable > config
// file > built-in default.
//
// The config file is plain text: one `key = value` per line, '#' comments,
// blank lines ignored, keys as in config_keys().
class Config {
 public:
  /// `flags` holds only the values given on the command line. The file is
  /// `config_file` if set, else $GIRP_CONFIG if set, else none.
  /// Errors: ConfigError for unreadable files, malformed lines and unknown
  /// keys.
  static Config resolve(const std::map<std::string, std::string>& flags, const EnvLookup& env,
                        std::optional<std::string> config_file = std::nullopt);

  const std::string& get(const std::string& key) const;
  /// Errors: ConfigError unless a non-negative integer.
  std::uint64_t get_u64(const std::string& key) const;
  Source source(const std::string& key) const;

  /// "key=value (source)" for every key.
  std::vector<std::string> describe() const;

 private:
  struct Entry {
    std::string value;
    Source source = Source::Default;
  };
  std::map<std::string, Entry> entries_;
};

}  // namespace girp::cli

#endif  // GIRP_CLI_CONFIG_HPP
