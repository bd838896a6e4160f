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

#include "girp/session/session.hpp"

#include <chrono>
#include <random>
#include <set>

#include "girp/error.hpp"
#include "girp/log.hpp"

namespace girp::session {
namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t ns_since(Clock::time_point start) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count());
}

// Rejects [offset, offset + len) that is not inside a buffer of `size` bytes.
void check_range(std::uint64_t id, std::uint64_t size, std::uint64_t offset, std::uint64_t len) {
  std::uint64_t end;
  if (__builtin_add_overflow(offset, len, &end) || end > size) {
    throw Error(ErrorCode::OutOfRange, "buffer " + std::to_string(id) + " holds " +
                                           std::to_string(size) + " bytes; asked for [" +
                                           std::to_string(offset) + ", +" + std::to_string(len) + ")");
  }
}

}  // namespace

wire::SessionId random_session_id() {
  static std::mutex mu;
  static std::mt19937_64 rng{std::random_device{}()};
  std::lock_guard lock(mu);
  wire::SessionId id;
  for (std::size_t i = 0; i < id.size(); i += 8) {
    std::uint64_t r = rng();
    for (std::size_t k = 0; k < 8; ++k) id[i + k] = static_cast<std::uint8_t>(r >> (8 * k));
  }
  return id;
}

Session::Session(const wire::SessionId& id, SessionConfig config)
    : id_(id), config_(config), executor_(exec::make_executor(config.backend, config.executor)) {}

std::uint64_t Session::epoch() const {
  std::lock_guard lock(mu_);
  return epoch_;
}

std::size_t Session::module_count() const {
  std::lock_guard lock(mu_);
  return modules_.size();
}

std::size_t Session::pipeline_count() const {
  std::lock_guard lock(mu_);
  return pipelines_.size();
}

std::size_t Session::buffer_count() const {
  std::lock_guard lock(mu_);
  return buffers_.size();
}

std::optional<Bytes> Session::buffer(std::uint64_t id) const {
  std::lock_guard lock(mu_);
  auto it = buffers_.find(id);
  if (it == buffers_.end()) return std::nullopt;
  return it->second;
}

std::uint64_t Session::last_export_ns() const {
  std::lock_guard lock(mu_);
  return export_ns_;
}

wire::Message Session::handle(const wire::Message& request) {
  try {
    if (std::holds_alternative<wire::ExportSession>(request)) {
      return wire::SessionSnapshot{export_snapshot()};
    }
    std::lock_guard lock(mu_);
    return dispatch_request(request);
  } catch (const Error& e) {
    return wire::ErrorMsg{static_cast<std::uint16_t>(e.code()), e.detail()};
  }
}

wire::Message Session::dispatch_request(const wire::Message& request) {
  using namespace wire;
  switch (type_of(request)) {
    case MsgType::Hello:
      return HelloAck{id_, executor_->capabilities().describe()};

    case MsgType::Ping:
      return Pong{std::get<Ping>(request).echo_token};

    case MsgType::LoadModule: {
      const auto& m = std::get<LoadModule>(request);
      if (sha256(m.module) != m.hash) {
        throw Error(ErrorCode::HashMismatch, "declared " + m.hash.hex() + ", bytes hash to " +
                                                 sha256(m.module).hex());
      }
      if (modules_.contains(m.hash)) return ModuleAck{m.hash, true};
      executor_->load(spirv::SpirvModule::from_bytes(m.module));
      modules_.emplace(m.hash, m.module);
      return ModuleAck{m.hash, false};
    }

    case MsgType::CreatePipeline: {
      const auto& m = std::get<CreatePipeline>(request);
      if (!modules_.contains(m.hash)) throw Error(ErrorCode::UnknownModule, m.hash.hex());
      auto handle = executor_->create_pipeline(m.hash, m.entry);
      std::uint64_t id = next_pipeline_++;
      pipelines_.emplace(id, Pipeline{m.hash, m.entry, handle});
      return PipelineAck{id};
    }

    case MsgType::AllocBuffer: {
      const auto& m = std::get<AllocBuffer>(request);
      if (buffers_.contains(m.buffer_id)) {
        throw Error(ErrorCode::BufferExists, std::to_string(m.buffer_id));
      }
      if (m.size > config_.executor.max_buffer_bytes) {
        throw Error(ErrorCode::ResourceLimit, std::to_string(m.size) + " bytes exceeds " +
                                                  std::to_string(config_.executor.max_buffer_bytes));
      }
      buffers_.emplace(m.buffer_id, Bytes(m.size, 0));
      return Ack{0, 0};
    }

    case MsgType::WriteBuffer: {
      const auto& m = std::get<WriteBuffer>(request);
      auto it = buffers_.find(m.buffer_id);
      if (it == buffers_.end()) throw Error(ErrorCode::UnknownBuffer, std::to_string(m.buffer_id));
      check_range(m.buffer_id, it->second.size(), m.offset, m.data.size());
      std::copy(m.data.begin(), m.data.end(), it->second.begin() + static_cast<std::ptrdiff_t>(m.offset));
      return Ack{0, 0};
    }

    case MsgType::ReadBuffer: {
      const auto& m = std::get<ReadBuffer>(request);
      auto it = buffers_.find(m.buffer_id);
      if (it == buffers_.end()) throw Error(ErrorCode::UnknownBuffer, std::to_string(m.buffer_id));
      check_range(m.buffer_id, it->second.size(), m.offset, m.len);
      if (m.len > kMaxPayload - 4) {
        throw Error(ErrorCode::Oversize, "read of " + std::to_string(m.len) + " bytes; chunk it");
      }
      auto begin = it->second.begin() + static_cast<std::ptrdiff_t>(m.offset);
      return BufferData{Bytes(begin, begin + m.len)};
    }

    case MsgType::Dispatch: {
      const auto& m = std::get<Dispatch>(request);
      auto pit = pipelines_.find(m.pipeline_id);
      if (pit == pipelines_.end()) {
        throw Error(ErrorCode::UnknownPipeline, std::to_string(m.pipeline_id));
      }
      exec::BufferMap bound;
      for (const auto& b : m.bindings) {
        auto bit = buffers_.find(b.buffer_id);
        if (bit == buffers_.end()) throw Error(ErrorCode::UnknownBuffer, std::to_string(b.buffer_id));
        spirv::DescriptorSlot slot{b.set, b.binding};
        if (!bound.emplace(slot, std::span<std::uint8_t>(bit->second)).second) {
          throw Error(ErrorCode::MalformedPayload, "set " + std::to_string(b.set) + " binding " +
                                                       std::to_string(b.binding) + " bound twice");
        }
      }
      auto t = executor_->dispatch(pit->second.handle, {m.gx, m.gy, m.gz}, bound);
      return DispatchAck{t.prepare_ns, t.execute_ns, t.readback_ns};
    }

    default:
      throw Error(ErrorCode::UnexpectedMessage,
                  std::string(msg_type_name(type_of(request))) + " is not valid inside a session");
  }
}

Snapshot Session::capture() const {
  Snapshot s;
  s.session_id = id_;
  s.epoch = epoch_;
  for (const auto& [hash, bytes] : modules_) s.modules.push_back({hash, bytes});
  for (const auto& [id, p] : pipelines_) s.pipelines.push_back({id, p.module_hash, p.entry});
  for (const auto& [id, bytes] : buffers_) s.buffers.push_back({id, bytes});
  return s;
}

Bytes Session::export_snapshot() {
  std::unique_lock lock(mu_, std::try_to_lock);
  if (!lock.owns_lock()) throw Error(ErrorCode::Busy, "a request is in flight");
  auto start = Clock::now();
  Bytes out = serialize(capture());
  export_ns_ = ns_since(start);
  return out;
}

std::unique_ptr<Session> Session::import_snapshot(ByteSpan bytes, SessionConfig config,
                                                  const std::optional<wire::SessionId>& id) {
  auto start = Clock::now();
  Snapshot snap = parse_snapshot(bytes);
  auto s = std::make_unique<Session>(id.value_or(snap.session_id), config);
  for (auto& m : snap.modules) {
    s->executor_->load(spirv::SpirvModule::from_bytes(m.bytes));
    s->modules_.emplace(m.hash, std::move(m.bytes));
  }
  for (auto& p : snap.pipelines) {
    auto handle = s->executor_->create_pipeline(p.module_hash, p.entry);
    s->pipelines_.emplace(p.id, Pipeline{p.module_hash, std::move(p.entry), handle});
    s->next_pipeline_ = p.id + 1;  // ids arrive ascending
  }
  for (auto& b : snap.buffers) s->buffers_.emplace(b.id, std::move(b.bytes));
  s->epoch_ = snap.epoch + 1;
  s->import_ns_ = ns_since(start);
  log::debug("imported session epoch ", s->epoch_, " with ", s->modules_.size(), " modules, ",
             s->pipelines_.size(), " pipelines, ", s->buffers_.size(), " buffers");
  return s;
}

}  // namespace girp::session
