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

#ifndef GIRP_WIRE_MESSAGE_HPP
#define GIRP_WIRE_MESSAGE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "girp/bytes.hpp"
#include "girp/digest.hpp"

namespace girp::wire {

// Frame layout, all integers little-endian:
//   0  magic "GIRP"       4
//   4  version            1
//   5  msg_type           1
//   6  flags              2   bit 0 = DEGRADED data
//   8  reserved           2   zero on emit, ignored on receive
//  10  session_id        16
//  26  request_id         8
//  34  payload_len        4
//  38  payload
inline constexpr std::size_t kHeaderSize = 38;
inline constexpr std::uint8_t kVersion = 1;
inline constexpr std::uint32_t kMaxPayload = 64u << 20;
inline constexpr std::uint16_t kFlagDegraded = 0x0001;
inline constexpr std::uint16_t kDefaultPort = 47001;

using SessionId = std::array<std::uint8_t, 16>;

enum class MsgType : std::uint8_t {
  Hello = 0x01,
  HelloAck = 0x02,
  LoadModule = 0x03,
  ModuleAck = 0x04,
  CreatePipeline = 0x05,
  PipelineAck = 0x06,
  AllocBuffer = 0x07,
  WriteBuffer = 0x08,
  Dispatch = 0x09,
  DispatchAck = 0x0A,
  ReadBuffer = 0x0B,
  BufferData = 0x0C,
  ExportSession = 0x0D,
  SessionSnapshot = 0x0E,
  ImportSession = 0x0F,
  Ping = 0x10,
  Pong = 0x11,
  Error = 0x12,
  Ack = 0x13,
};

std::string_view msg_type_name(MsgType type);

enum class ClientKind : std::uint8_t { Ue = 0, Server = 1 };

struct Hello {
  ClientKind client_kind = ClientKind::Ue;
  std::uint32_t spirv_min = 0;
  std::uint32_t spirv_max = 0;
  std::string backend;
  bool operator==(const Hello&) const = default;
};

struct HelloAck {
  SessionId session{};
  std::string capabilities;
  bool operator==(const HelloAck&) const = default;
};

struct LoadModule {
  Digest hash;
  Bytes module;
  bool operator==(const LoadModule&) const = default;
};

struct ModuleAck {
  Digest hash;
  bool already_cached = false;
  bool operator==(const ModuleAck&) const = default;
};

struct CreatePipeline {
  Digest hash;
  std::string entry;
  bool operator==(const CreatePipeline&) const = default;
};

struct PipelineAck {
  std::uint64_t pipeline_id = 0;
  bool operator==(const PipelineAck&) const = default;
};

struct AllocBuffer {
  std::uint64_t buffer_id = 0;
  std::uint64_t size = 0;
  bool operator==(const AllocBuffer&) const = default;
};

struct WriteBuffer {
  std::uint64_t buffer_id = 0;
  std::uint64_t offset = 0;
  Bytes data;
  bool operator==(const WriteBuffer&) const = default;
};

struct BindingRef {
  std::uint32_t set = 0;
  std::uint32_t binding = 0;
  std::uint64_t buffer_id = 0;
  bool operator==(const BindingRef&) const = default;
};

struct Dispatch {
  std::uint64_t pipeline_id = 0;
  std::uint32_t gx = 0, gy = 0, gz = 0;
  std::vector<BindingRef> bindings;
  bool operator==(const Dispatch&) const = default;
};

struct DispatchAck {
  std::uint64_t prepare_ns = 0;
  std::uint64_t execute_ns = 0;
  std::uint64_t readback_ns = 0;
  bool operator==(const DispatchAck&) const = default;
};

struct ReadBuffer {
  std::uint64_t buffer_id = 0;
  std::uint64_t offset = 0;
  std::uint32_t len = 0;
  bool operator==(const ReadBuffer&) const = default;
};

struct BufferData {
  Bytes data;
  bool operator==(const BufferData&) const = default;
};

struct ExportSession {
  bool operator==(const ExportSession&) const = default;
};

struct SessionSnapshot {
  Bytes snapshot;
  bool operator==(const SessionSnapshot&) const = default;
};

struct ImportSession {
  Bytes snapshot;
  bool operator==(const ImportSession&) const = default;
};

struct Ping {
  std::uint64_t echo_token = 0;
  bool operator==(const Ping&) const = default;
};

struct Pong {
  std::uint64_t echo_token = 0;
  bool operator==(const Pong&) const = default;
};

// Carries the raw registry value so unknown codes from newer peers survive.
struct ErrorMsg {
  std::uint16_t code = 0;
  std::string message;
  bool operator==(const ErrorMsg&) const = default;
};

// Generic success reply for requests whose result is a single number:
// ALLOC_BUFFER and WRITE_BUFFER (value 0), IMPORT_SESSION (value = new
// epoch, elapsed_ns = server-side import time).
struct Ack {
  std::uint64_t value = 0;
  std::uint64_t elapsed_ns = 0;
  bool operator==(const Ack&) const = default;
};

// Alternative order matches MsgType - 1.
using Message =
    std::variant<Hello, HelloAck, LoadModule, ModuleAck, CreatePipeline, PipelineAck, AllocBuffer,
                 WriteBuffer, Dispatch, DispatchAck, ReadBuffer, BufferData, ExportSession,
                 SessionSnapshot, ImportSession, Ping, Pong, ErrorMsg, Ack>;

MsgType type_of(const Message& message);

/// The only success reply for a request type; requests only.
MsgType response_type(MsgType request);
bool is_request(MsgType type);

struct FrameHeader {
  std::uint8_t version = kVersion;
  std::uint8_t msg_type = 0;  // raw; may be outside MsgType
  std::uint16_t flags = 0;
  SessionId session{};
  std::uint64_t request_id = 0;
  std::uint32_t payload_len = 0;

  bool degraded() const { return (flags & kFlagDegraded) != 0; }
  bool operator==(const FrameHeader&) const = default;
};

struct Frame {
  FrameHeader header;
  Message message;
  bool operator==(const Frame&) const = default;
};

/// Reserved flag bits are cleared. Errors: Oversize.
Bytes encode(const Message& message, const SessionId& session, std::uint64_t request_id,
             std::uint16_t flags = 0);

/// Parses the fixed header from the first kHeaderSize bytes.
/// Errors: Truncated, BadMagic, BadVersion, Oversize. The type byte is not
/// checked here so a server can still answer an unknown type with ERROR.
FrameHeader decode_header(ByteSpan bytes);

/// Errors: UnknownMsgType, Truncated, TrailingBytes, MalformedPayload.
Message decode_payload(std::uint8_t msg_type, ByteSpan payload);

/// Exactly one frame. Errors: everything above, and TrailingBytes when the
/// input runs past payload_len.
Frame decode(ByteSpan bytes);

}  // namespace girp::wire

#endif  // GIRP_WIRE_MESSAGE_HPP
