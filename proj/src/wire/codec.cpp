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

#include <cstring>

#include "girp/error.hpp"
#include "girp/wire/message.hpp"

namespace girp::wire {
namespace {

constexpr std::uint8_t kMagic[4] = {'G', 'I', 'R', 'P'};
constexpr std::uint8_t kLastType = static_cast<std::uint8_t>(MsgType::Ack);

std::string hex_byte(std::uint8_t b) {
  static const char* digits = "0123456789abcdef";
  return std::string("0x") + digits[b >> 4] + digits[b & 15];
}

void put_digest(ByteWriter& w, const Digest& d) { w.raw(d.bytes); }

Digest get_digest(ByteReader& r) {
  Digest d;
  auto s = r.raw(d.bytes.size());
  std::memcpy(d.bytes.data(), s.data(), s.size());
  return d;
}

bool get_bool(ByteReader& r, const char* field) {
  std::uint8_t v = r.u8();
  if (v > 1) {
    throw Error(ErrorCode::MalformedPayload, std::string(field) + " must be 0 or 1, got " +
                                                 std::to_string(v));
  }
  return v == 1;
}

struct PayloadWriter {
  ByteWriter& w;

  void operator()(const Hello& m) {
    w.u8(static_cast<std::uint8_t>(m.client_kind));
    w.u32(m.spirv_min);
    w.u32(m.spirv_max);
    w.str16(m.backend);
  }
  void operator()(const HelloAck& m) {
    w.raw(m.session);
    w.str16(m.capabilities);
  }
  void operator()(const LoadModule& m) {
    put_digest(w, m.hash);
    w.blob32(m.module);
  }
  void operator()(const ModuleAck& m) {
    put_digest(w, m.hash);
    w.u8(m.already_cached ? 1 : 0);
  }
  void operator()(const CreatePipeline& m) {
    put_digest(w, m.hash);
    w.str16(m.entry);
  }
  void operator()(const PipelineAck& m) { w.u64(m.pipeline_id); }
  void operator()(const AllocBuffer& m) {
    w.u64(m.buffer_id);
    w.u64(m.size);
  }
  void operator()(const WriteBuffer& m) {
    w.u64(m.buffer_id);
    w.u64(m.offset);
    w.blob32(m.data);
  }
  void operator()(const Dispatch& m) {
    if (m.bindings.size() > 0xffff) {
      throw Error(ErrorCode::Oversize, std::to_string(m.bindings.size()) + " bindings");
    }
    w.u64(m.pipeline_id);
    w.u32(m.gx);
    w.u32(m.gy);
    w.u32(m.gz);
    w.u16(static_cast<std::uint16_t>(m.bindings.size()));
    for (const auto& b : m.bindings) {
      w.u32(b.set);
      w.u32(b.binding);
      w.u64(b.buffer_id);
    }
  }
  void operator()(const DispatchAck& m) {
    w.u64(m.prepare_ns);
    w.u64(m.execute_ns);
    w.u64(m.readback_ns);
  }
  void operator()(const ReadBuffer& m) {
    w.u64(m.buffer_id);
    w.u64(m.offset);
    w.u32(m.len);
  }
  void operator()(const BufferData& m) { w.blob32(m.data); }
  void operator()(const ExportSession&) {}
  void operator()(const SessionSnapshot& m) { w.blob32(m.snapshot); }
  void operator()(const ImportSession& m) { w.blob32(m.snapshot); }
  void operator()(const Ping& m) { w.u64(m.echo_token); }
  void operator()(const Pong& m) { w.u64(m.echo_token); }
  void operator()(const ErrorMsg& m) {
    w.u16(m.code);
    w.str16(m.message);
  }
  void operator()(const Ack& m) {
    w.u64(m.value);
    w.u64(m.elapsed_ns);
  }
};

Message read_payload(MsgType type, ByteReader& r) {
  switch (type) {
    case MsgType::Hello: {
      Hello m;
      std::uint8_t kind = r.u8();
      if (kind > 1) throw Error(ErrorCode::MalformedPayload, "client_kind " + std::to_string(kind));
      m.client_kind = static_cast<ClientKind>(kind);
      m.spirv_min = r.u32();
      m.spirv_max = r.u32();
      m.backend = r.str16();
      return m;
    }
    case MsgType::HelloAck: {
      HelloAck m;
      auto s = r.raw(16);
      std::memcpy(m.session.data(), s.data(), 16);
      m.capabilities = r.str16();
      return m;
    }
    case MsgType::LoadModule: {
      LoadModule m;
      m.hash = get_digest(r);
      m.module = r.blob32();
      return m;
    }
    case MsgType::ModuleAck: {
      ModuleAck m;
      m.hash = get_digest(r);
      m.already_cached = get_bool(r, "already_cached");
      return m;
    }
    case MsgType::CreatePipeline: {
      CreatePipeline m;
      m.hash = get_digest(r);
      m.entry = r.str16();
      return m;
    }
    case MsgType::PipelineAck: return PipelineAck{r.u64()};
    case MsgType::AllocBuffer: {
      AllocBuffer m;
      m.buffer_id = r.u64();
      m.size = r.u64();
      return m;
    }
    case MsgType::WriteBuffer: {
      WriteBuffer m;
      m.buffer_id = r.u64();
      m.offset = r.u64();
      m.data = r.blob32();
      return m;
    }
    case MsgType::Dispatch: {
      Dispatch m;
      m.pipeline_id = r.u64();
      m.gx = r.u32();
      m.gy = r.u32();
      m.gz = r.u32();
      std::uint16_t count = r.u16();
      if (std::size_t{count} * 16 > r.remaining()) {
        throw Error(ErrorCode::Truncated, "binding count " + std::to_string(count) + " needs " +
                                              std::to_string(count * 16) + " bytes, " +
                                              std::to_string(r.remaining()) + " left");
      }
      m.bindings.reserve(count);
      for (std::uint16_t i = 0; i < count; ++i) {
        BindingRef b;
        b.set = r.u32();
        b.binding = r.u32();
        b.buffer_id = r.u64();
        m.bindings.push_back(b);
      }
      return m;
    }
    case MsgType::DispatchAck: {
      DispatchAck m;
      m.prepare_ns = r.u64();
      m.execute_ns = r.u64();
      m.readback_ns = r.u64();
      return m;
    }
    case MsgType::ReadBuffer: {
      ReadBuffer m;
      m.buffer_id = r.u64();
      m.offset = r.u64();
      m.len = r.u32();
      return m;
    }
    case MsgType::BufferData: return BufferData{r.blob32()};
    case MsgType::ExportSession: return ExportSession{};
    case MsgType::SessionSnapshot: return SessionSnapshot{r.blob32()};
    case MsgType::ImportSession: return ImportSession{r.blob32()};
    case MsgType::Ping: return Ping{r.u64()};
    case MsgType::Pong: return Pong{r.u64()};
    case MsgType::Error: {
      ErrorMsg m;
      m.code = r.u16();
      m.message = r.str16();
      return m;
    }
    case MsgType::Ack: {
      Ack m;
      m.value = r.u64();
      m.elapsed_ns = r.u64();
      return m;
    }
  }
  throw Error(ErrorCode::UnknownMsgType, hex_byte(static_cast<std::uint8_t>(type)));
}

}  // namespace

std::string_view msg_type_name(MsgType type) {
  switch (type) {
    case MsgType::Hello: return "HELLO";
    case MsgType::HelloAck: return "HELLO_ACK";
    case MsgType::LoadModule: return "LOAD_MODULE";
    case MsgType::ModuleAck: return "MODULE_ACK";
    case MsgType::CreatePipeline: return "CREATE_PIPELINE";
    case MsgType::PipelineAck: return "PIPELINE_ACK";
    case MsgType::AllocBuffer: return "ALLOC_BUFFER";
    case MsgType::WriteBuffer: return "WRITE_BUFFER";
    case MsgType::Dispatch: return "DISPATCH";
    case MsgType::DispatchAck: return "DISPATCH_ACK";
    case MsgType::ReadBuffer: return "READ_BUFFER";
    case MsgType::BufferData: return "BUFFER_DATA";
    case MsgType::ExportSession: return "EXPORT_SESSION";
    case MsgType::SessionSnapshot: return "SESSION_SNAPSHOT";
    case MsgType::ImportSession: return "IMPORT_SESSION";
    case MsgType::Ping: return "PING";
    case MsgType::Pong: return "PONG";
    case MsgType::Error: return "ERROR";
    case MsgType::Ack: return "ACK";
  }
  return "UNKNOWN";
}

MsgType type_of(const Message& message) {
  return static_cast<MsgType>(message.index() + 1);
}

bool is_request(MsgType type) {
  switch (type) {
    case MsgType::Hello:
    case MsgType::LoadModule:
    case MsgType::CreatePipeline:
    case MsgType::AllocBuffer:
    case MsgType::WriteBuffer:
    case MsgType::Dispatch:
    case MsgType::ReadBuffer:
    case MsgType::ExportSession:
    case MsgType::ImportSession:
    case MsgType::Ping:
      return true;
    default:
      return false;
  }
}

MsgType response_type(MsgType request) {
  switch (request) {
    case MsgType::Hello: return MsgType::HelloAck;
    case MsgType::LoadModule: return MsgType::ModuleAck;
    case MsgType::CreatePipeline: return MsgType::PipelineAck;
    case MsgType::AllocBuffer: return MsgType::Ack;
    case MsgType::WriteBuffer: return MsgType::Ack;
    case MsgType::Dispatch: return MsgType::DispatchAck;
    case MsgType::ReadBuffer: return MsgType::BufferData;
    case MsgType::ExportSession: return MsgType::SessionSnapshot;
    case MsgType::ImportSession: return MsgType::Ack;
    case MsgType::Ping: return MsgType::Pong;
    default:
      throw Error(ErrorCode::InvalidArgument,
                  std::string(msg_type_name(request)) + " is not a request");
  }
}

Bytes encode(const Message& message, const SessionId& session, std::uint64_t request_id,
             std::uint16_t flags) {
  ByteWriter payload;
  std::visit(PayloadWriter{payload}, message);
  if (payload.size() > kMaxPayload) {
    throw Error(ErrorCode::Oversize, std::to_string(payload.size()) + " byte payload exceeds " +
                                         std::to_string(kMaxPayload));
  }

  ByteWriter w;
  w.raw(kMagic);
  w.u8(kVersion);
  w.u8(static_cast<std::uint8_t>(type_of(message)));
  w.u16(flags & kFlagDegraded);
  w.u16(0);
  w.raw(session);
  w.u64(request_id);
  w.u32(static_cast<std::uint32_t>(payload.size()));
  w.raw(payload.bytes());
  return std::move(w).take();
}

FrameHeader decode_header(ByteSpan bytes) {
  ByteReader r(bytes);
  auto magic = r.raw(4);
  if (std::memcmp(magic.data(), kMagic, 4) != 0) {
    throw Error(ErrorCode::BadMagic, "frame starts with " + to_hex(magic));
  }
  FrameHeader h;
  h.version = r.u8();
  if (h.version != kVersion) {
    throw Error(ErrorCode::BadVersion, "version " + std::to_string(h.version));
  }
  h.msg_type = r.u8();
  h.flags = r.u16() & kFlagDegraded;
  r.u16();  // reserved
  auto s = r.raw(16);
  std::memcpy(h.session.data(), s.data(), 16);
  h.request_id = r.u64();
  h.payload_len = r.u32();
  if (h.payload_len > kMaxPayload) {
    throw Error(ErrorCode::Oversize, "payload_len " + std::to_string(h.payload_len));
  }
  return h;
}

Message decode_payload(std::uint8_t msg_type, ByteSpan payload) {
  if (msg_type == 0 || msg_type > kLastType) {
    throw Error(ErrorCode::UnknownMsgType, hex_byte(msg_type));
  }
  ByteReader r(payload);
  Message m = read_payload(static_cast<MsgType>(msg_type), r);
  if (!r.done()) {
    throw Error(ErrorCode::TrailingBytes, std::to_string(r.remaining()) + " unread payload bytes in " +
                                              std::string(msg_type_name(static_cast<MsgType>(msg_type))));
  }
  return m;
}

Frame decode(ByteSpan bytes) {
  Frame f;
  f.header = decode_header(bytes);
  ByteSpan rest = bytes.subspan(kHeaderSize);
  if (rest.size() < f.header.payload_len) {
    throw Error(ErrorCode::Truncated, "payload_len " + std::to_string(f.header.payload_len) +
                                          " but " + std::to_string(rest.size()) + " bytes follow");
  }
  if (rest.size() > f.header.payload_len) {
    throw Error(ErrorCode::TrailingBytes,
                std::to_string(rest.size() - f.header.payload_len) + " bytes after the frame");
  }
  f.message = decode_payload(f.header.msg_type, rest);
  return f;
}

}  // namespace girp::wire
