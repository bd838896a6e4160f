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

#include "girp/error.hpp"

#include <array>
#include <utility>

namespace girp {
namespace {

constexpr std::array kNames = {
    std::pair{ErrorCode::TooShort, "TooShort"},
    std::pair{ErrorCode::BadMagic, "BadMagic"},
    std::pair{ErrorCode::BadSchema, "BadSchema"},
    std::pair{ErrorCode::Misaligned, "Misaligned"},
    std::pair{ErrorCode::ZeroWordCount, "ZeroWordCount"},
    std::pair{ErrorCode::TruncatedInstruction, "TruncatedInstruction"},
    std::pair{ErrorCode::DuplicateEntryPointName, "DuplicateEntryPointName"},
    std::pair{ErrorCode::DuplicateBinding, "DuplicateBinding"},
    std::pair{ErrorCode::MalformedModule, "MalformedModule"},
    std::pair{ErrorCode::UnsupportedOpcode, "UnsupportedOpcode"},
    std::pair{ErrorCode::MissingBinding, "MissingBinding"},
    std::pair{ErrorCode::OutOfBoundsAccess, "OutOfBoundsAccess"},
    std::pair{ErrorCode::LimitExceeded, "LimitExceeded"},
    std::pair{ErrorCode::EntryNotFound, "EntryNotFound"},
    std::pair{ErrorCode::DivideByZero, "DivideByZero"},
    std::pair{ErrorCode::BackendReject, "BackendReject"},
    std::pair{ErrorCode::UnknownModule, "UnknownModule"},
    std::pair{ErrorCode::NotCompute, "NotCompute"},
    std::pair{ErrorCode::UnknownBuffer, "UnknownBuffer"},
    std::pair{ErrorCode::ExecError, "ExecError"},
    std::pair{ErrorCode::BackendUnavailable, "BackendUnavailable"},
    std::pair{ErrorCode::UnknownPipeline, "UnknownPipeline"},
    std::pair{ErrorCode::BadVersion, "BadVersion"},
    std::pair{ErrorCode::UnknownMsgType, "UnknownMsgType"},
    std::pair{ErrorCode::Truncated, "Truncated"},
    std::pair{ErrorCode::TrailingBytes, "TrailingBytes"},
    std::pair{ErrorCode::Oversize, "Oversize"},
    std::pair{ErrorCode::MalformedPayload, "MalformedPayload"},
    std::pair{ErrorCode::Timeout, "Timeout"},
    std::pair{ErrorCode::ConnectionClosed, "ConnectionClosed"},
    std::pair{ErrorCode::UnexpectedMessage, "UnexpectedMessage"},
    std::pair{ErrorCode::IoError, "IoError"},
    std::pair{ErrorCode::OutOfRange, "OutOfRange"},
    std::pair{ErrorCode::Busy, "Busy"},
    std::pair{ErrorCode::DigestMismatch, "DigestMismatch"},
    std::pair{ErrorCode::FormatVersionUnsupported, "FormatVersionUnsupported"},
    std::pair{ErrorCode::UnknownSession, "UnknownSession"},
    std::pair{ErrorCode::BufferExists, "BufferExists"},
    std::pair{ErrorCode::HashMismatch, "HashMismatch"},
    std::pair{ErrorCode::ResourceLimit, "ResourceLimit"},
    std::pair{ErrorCode::NoLocalMirror, "NoLocalMirror"},
    std::pair{ErrorCode::ConnectionLost, "ConnectionLost"},
    std::pair{ErrorCode::ClientClosed, "ClientClosed"},
    std::pair{ErrorCode::Empty, "Empty"},
    std::pair{ErrorCode::InvalidModel, "InvalidModel"},
    std::pair{ErrorCode::InvalidArgument, "InvalidArgument"},
    std::pair{ErrorCode::ConfigError, "ConfigError"},
    std::pair{ErrorCode::ScriptError, "ScriptError"},
};

std::string format_what(ErrorCode code, const std::string& detail) {
  std::string what(error_name(code));
  if (!detail.empty()) {
    what += ": ";
    what += detail;
  }
  return what;
}

}  // namespace

std::string_view error_name(ErrorCode code) {
  for (const auto& [c, name] : kNames) {
    if (c == code) return name;
  }
  return "Unknown";
}

std::optional<ErrorCode> error_from_wire(std::uint16_t value) {
  for (const auto& [c, name] : kNames) {
    if (static_cast<std::uint16_t>(c) == value) return c;
  }
  return std::nullopt;
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(format_what(code, detail)), code_(code), detail_(detail) {}

}  // namespace girp
