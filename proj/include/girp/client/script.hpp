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

#ifndef GIRP_CLIENT_SCRIPT_HPP
#define GIRP_CLIENT_SCRIPT_HPP

#include <filesystem>
#include <istream>
#include <ostream>

#include "girp/client/client.hpp"

namespace girp::client {

// Line-oriented workload scripts for `girp client run`. One command per
// line, '#' starts a comment:
//
//   load <file | fixture:NAME>
//   pipeline <hash | @last> <entry>
//   alloc <id> <size>
//   write <id> <offset> <file>
//   fill-u32 <id> <offset> <count> <value>
//   iota-u32 <id> <offset> <count>
//   dispatch <pipeline | @last> <gx> <gy> <gz> <set:binding:buffer>...
//   read <id> <offset> <len> [> <file>]
//   expect-u32 <id> <index> <value>
//   sleep <ms>
//   reconnect
//
// Relative file names resolve against `base_dir`. Each command prints one
// result line to `out`.
struct ScriptStats {
  int commands = 0;
  int remote_dispatches = 0;
  int local_dispatches = 0;
};

/// A module file, or an embedded fixture named "fixture:NAME" (multiply,
/// multiply_sb13, saxpy, fill, frame, branch). Errors: ScriptError.
Bytes read_module_source(const std::string& arg, const std::filesystem::path& base_dir);

/// Errors: ScriptError naming the line for syntax problems and failed
/// expectations; client errors propagate with the line prepended.
ScriptStats run_script(OffloadClient& client, std::istream& script,
                       const std::filesystem::path& base_dir, std::ostream& out);

}  // namespace girp::client

#endif  // GIRP_CLIENT_SCRIPT_HPP
