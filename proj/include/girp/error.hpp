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

#ifndef GIRP_ERROR_HPP
#define GIRP_ERROR_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace girp {

// Closed error registry. The numeric values travel on the wire in ERROR
// frames, so they must never be renumbered.
enum class ErrorCode : std::uint16_t {
  // spirv_reflect
  TooShort = 0x0001,
  BadMagic = 0x0002,
  BadSchema = 0x0003,
  Misaligned = 0x0004,
  ZeroWordCount = 0x0005,
  TruncatedInstruction = 0x0006,
  DuplicateEntryPointName = 0x0007,
  DuplicateBinding = 0x0008,
  MalformedModule = 0x0009,

  // spirv_interp
  UnsupportedOpcode = 0x0010,
  MissingBinding = 0x0011,
  OutOfBoundsAccess = 0x0012,
  LimitExceeded = 0x0013,
  EntryNotFound = 0x0014,
  DivideByZero = 0x0015,

  // executor
  BackendReject = 0x0020,
  UnknownModule = 0x0021,
  NotCompute = 0x0022,
  UnknownBuffer = 0x0023,
  ExecError = 0x0024,
  BackendUnavailable = 0x0025,
  UnknownPipeline = 0x0026,

  // wire_protocol
  BadVersion = 0x0030,
  UnknownMsgType = 0x0031,
  Truncated = 0x0032,
  TrailingBytes = 0x0033,
  Oversize = 0x0034,
  MalformedPayload = 0x0035,
  Timeout = 0x0036,
  ConnectionClosed = 0x0037,
  UnexpectedMessage = 0x0038,
  IoError = 0x0039,

  // session
  OutOfRange = 0x0040,
  Busy = 0x0041,
  DigestMismatch = 0x0042,
  FormatVersionUnsupported = 0x0043,
  UnknownSession = 0x0044,
  BufferExists = 0x0045,
  HashMismatch = 0x0046,
  ResourceLimit = 0x0047,

  // client_runtime
  NoLocalMirror = 0x0050,
  ConnectionLost = 0x0051,
  ClientClosed = 0x0052,

  // bench_harness
  Empty = 0x0060,
  InvalidModel = 0x0061,
  InvalidArgument = 0x0062,

  // cli
  ConfigError = 0x0070,
  ScriptError = 0x0071,
};

std::string_view error_name(ErrorCode code);

// Maps a wire value back into the registry; nullopt for unassigned values.
std::optional<ErrorCode> error_from_wire(std::uint16_t value);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace girp

#endif  // GIRP_ERROR_HPP
