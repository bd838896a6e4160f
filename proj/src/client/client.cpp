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

#include "girp/client/client.hpp"

#include <algorithm>
#include <chrono>

#include "girp/error.hpp"
#include "girp/log.hpp"

namespace girp::client {
namespace {

using Clock = std::chrono::steady_clock;

// Buffer transfers are split so no frame approaches the payload cap.
constexpr std::uint64_t kMaxChunk = 16u << 20;
constexpr std::uint64_t kRequestOverhead = 64;  // ids, offsets and length prefixes

std::uint64_t ns_between(Clock::time_point a, Clock::time_point b) {
  return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(b - a).count());
}

bool is_transport_failure(ErrorCode c) {
  switch (c) {
    case ErrorCode::Timeout:
    case ErrorCode::ConnectionClosed:
    case ErrorCode::IoError:
    case ErrorCode::BadMagic:
    case ErrorCode::BadVersion:
    case ErrorCode::Oversize:
    case ErrorCode::UnknownMsgType:
    case ErrorCode::Truncated:
    case ErrorCode::TrailingBytes:
    case ErrorCode::MalformedPayload:
      return true;
    default:
      return false;
  }
}

void check_range(std::uint64_t size, std::uint64_t offset, std::uint64_t len) {
  std::uint64_t end;
  if (__builtin_add_overflow(offset, len, &end) || end > size) {
    throw Error(ErrorCode::OutOfRange, "[" + std::to_string(offset) + ", +" + std::to_string(len) +
                                           ") outside " + std::to_string(size) + " bytes");
  }
}

}  // namespace

std::string_view state_name(State state) {
  switch (state) {
    case State::Connected: return "Connected";
    case State::Degraded: return "Degraded";
    case State::Closed: return "Closed";
  }
  return "?";
}

std::string_view origin_name(Origin origin) {
  return origin == Origin::Remote ? "Remote" : "LocalDegraded";
}

OffloadClient::OffloadClient(Connector connector, ClientOptions options)
    : connector_(std::move(connector)), options_(std::move(options)), local_(options_.local) {
  if (options_.max_payload <= kRequestOverhead || options_.max_payload > wire::kMaxPayload) {
    throw Error(ErrorCode::ConfigError, "frame payload cap must be in (" + std::to_string(kRequestOverhead) +
                                            ", " + std::to_string(wire::kMaxPayload) + "]");
  }
  chunk_ = std::min<std::uint64_t>(kMaxChunk, options_.max_payload - kRequestOverhead);
  open_session(options_.resume_session);
  if (options_.heartbeat_enabled) start_heartbeat();
}

OffloadClient::~OffloadClient() { close(); }

std::unique_ptr<OffloadClient> OffloadClient::connect(const wire::Endpoint& server,
                                                      ClientOptions options) {
  Millis connect_timeout = std::max(options.heartbeat.interval, Millis(100));
  Connector c = [server, connect_timeout] { return wire::connect_tcp(server, connect_timeout); };
  return std::make_unique<OffloadClient>(std::move(c), std::move(options));
}

State OffloadClient::state() const {
  std::lock_guard lock(mu_);
  return state_;
}

wire::SessionId OffloadClient::session() const {
  std::lock_guard lock(mu_);
  return session_;
}

std::string OffloadClient::server_capabilities() const {
  std::lock_guard lock(mu_);
  return capabilities_;
}

std::vector<StateEvent> OffloadClient::drain_events() {
  std::lock_guard lock(mu_);
  return std::exchange(events_, {});
}

void OffloadClient::open_session(std::optional<wire::SessionId> resume) {
  channel_ = std::make_unique<wire::FrameChannel>(connector_());
  channel_->set_max_payload(options_.max_payload);
  wire::SessionId sid = resume.value_or(wire::SessionId{});
  std::uint64_t rid = next_request_++;
  channel_->send(wire::Hello{wire::ClientKind::Ue, 0x00010000, 0x00010600, "interp"}, sid, rid);
  wire::Frame f = channel_->receive(options_.request_timeout);
  if (const auto* err = std::get_if<wire::ErrorMsg>(&f.message)) {
    channel_->close();
    throw Error(error_from_wire(err->code).value_or(ErrorCode::UnexpectedMessage), err->message);
  }
  const auto* ack = std::get_if<wire::HelloAck>(&f.message);
  if (ack == nullptr) {
    throw Error(ErrorCode::UnexpectedMessage, std::string(msg_type_name(wire::type_of(f.message))));
  }
  std::lock_guard lock(mu_);
  session_ = ack->session;
  capabilities_ = ack->capabilities;
  log::info("session ", to_hex(session_), (resume ? " resumed" : " opened"));
}

void OffloadClient::transition(State to, const std::string& reason, Millis nominal,
                               std::uint64_t detection_ns) {
  std::lock_guard lock(mu_);
  if (state_ == to || state_ == State::Closed) return;
  events_.push_back({state_, to, reason, nominal, detection_ns});
  log::info("client ", state_name(state_), " -> ", state_name(to), ": ", reason);
  state_ = to;
  cv_.notify_all();
}

void OffloadClient::lost(const Error& cause) {
  transition(State::Degraded, std::string("request failed: ") + cause.what(), Millis(0), 0);
  if (channel_) channel_->close();
  throw Error(ErrorCode::ConnectionLost, cause.what());
}

wire::Message OffloadClient::call(const wire::Message& request, std::uint16_t flags) {
  std::uint64_t rid = next_request_++;
  wire::Frame f;
  try {
    if (!channel_) throw Error(ErrorCode::ConnectionClosed, "no connection");
    channel_->send(request, session_, rid, flags);
    auto deadline = Clock::now() + options_.request_timeout;
    do {
      auto left = std::chrono::ceil<Millis>(deadline - Clock::now());
      if (left.count() <= 0) throw Error(ErrorCode::Timeout, "no response to request " + std::to_string(rid));
      f = channel_->receive(left);
    } while (f.header.request_id != rid);  // late replies to abandoned requests
  } catch (const Error& e) {
    if (is_transport_failure(e.code())) lost(e);
    throw;
  }
  if (const auto* err = std::get_if<wire::ErrorMsg>(&f.message)) {
    throw Error(error_from_wire(err->code).value_or(ErrorCode::UnexpectedMessage), err->message);
  }
  auto expected = wire::response_type(wire::type_of(request));
  if (wire::type_of(f.message) != expected) {
    throw Error(ErrorCode::UnexpectedMessage, std::string(msg_type_name(wire::type_of(f.message))) +
                                                  " in reply to " +
                                                  std::string(msg_type_name(wire::type_of(request))));
  }
  return f.message;
}

void OffloadClient::start_heartbeat() {
  heartbeat_ = std::thread([this] { heartbeat_loop(); });
}

void OffloadClient::stop_heartbeat() {
  {
    std::lock_guard lock(mu_);
    heartbeat_stop_ = true;
    cv_.notify_all();
  }
  if (heartbeat_.joinable()) heartbeat_.join();
}

// Pings on its own connection at a fixed rate. Each tick that does not get
// its PONG within one interval, including ticks where the connection cannot
// be opened, is a miss.
void OffloadClient::heartbeat_loop() {
  const auto interval = options_.heartbeat.interval;
  const int threshold = options_.heartbeat.miss_threshold;
  std::unique_ptr<wire::FrameChannel> hb;
  int misses = 0;
  std::optional<Clock::time_point> first_miss;
  auto next = Clock::now();

  for (;;) {
    wire::SessionId sid;
    {
      std::unique_lock lock(mu_);
      next += interval;
      if (cv_.wait_until(lock, next, [&] { return heartbeat_stop_; })) break;
      if (state_ != State::Connected) {
        hb.reset();
        misses = 0;
        first_miss.reset();
        next = Clock::now();
        continue;
      }
      sid = session_;
    }

    auto sent = Clock::now();
    bool ok = false;
    try {
      if (!hb) hb = std::make_unique<wire::FrameChannel>(connector_());
      wire::measure_rtt(*hb, sid, interval);
      ok = true;
    } catch (const Error& e) {
      log::debug("heartbeat miss: ", e.what());
      if (hb) hb->close();
      hb.reset();
    }
    if (ok) {
      misses = 0;
      first_miss.reset();
      continue;
    }
    if (!first_miss) first_miss = sent;
    if (++misses >= threshold) {
      transition(State::Degraded, std::to_string(misses) + " heartbeats missed", threshold * interval,
                 ns_between(*first_miss, Clock::now()));
      misses = 0;
      first_miss.reset();
    }
    // A slow miss must not push later ticks back.
    if (Clock::now() > next + interval) next = Clock::now() - interval;
  }
  if (hb) hb->close();
}

Digest OffloadClient::load_module(const Bytes& module) {
  State s = state();
  if (s == State::Closed) throw Error(ErrorCode::ClientClosed);
  Digest hash = sha256(module);
  bool uploaded = false;
  if (s == State::Connected) {
    try {
      call(wire::LoadModule{hash, module});
      uploaded = true;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ConnectionLost) throw;
    }
  }

  auto [it, inserted] = modules_.try_emplace(hash);
  ModuleMirror& m = it->second;
  if (inserted) {
    m.bytes = module;
    try {
      local_.load(spirv::SpirvModule::from_bytes(module));
      m.local_ok = true;
    } catch (const Error& e) {
      if (!uploaded && e.code() != ErrorCode::BackendReject) {
        modules_.erase(it);
        throw;
      }
      m.local_reject = e.what();
      log::warn("module ", hash.hex().substr(0, 16), " cannot run locally: ", e.what());
    }
  }
  m.uploaded = m.uploaded || uploaded;
  return hash;
}

std::uint64_t OffloadClient::create_pipeline(const Digest& module_hash, const std::string& entry) {
  State s = state();
  if (s == State::Closed) throw Error(ErrorCode::ClientClosed);
  std::uint64_t next_ref = pipelines_.empty() ? 1 : pipelines_.rbegin()->first + 1;
  if (s == State::Connected) {
    try {
      auto ack = std::get<wire::PipelineAck>(call(wire::CreatePipeline{module_hash, entry}));
      std::uint64_t ref = pipelines_.contains(ack.pipeline_id) ? next_ref : ack.pipeline_id;
      pipelines_[ref] = {module_hash, entry, ack.pipeline_id};
      return ref;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ConnectionLost) throw;
    }
  }
  if (!modules_.contains(module_hash)) throw Error(ErrorCode::NoLocalMirror, module_hash.hex());
  pipelines_[next_ref] = {module_hash, entry, std::nullopt};
  try {
    local_pipeline(next_ref);
  } catch (const Error& e) {
    // Only an unusable entry name is fatal here; BackendReject waits for
    // dispatch, like on the connected path.
    if (e.code() != ErrorCode::BackendReject) {
      pipelines_.erase(next_ref);
      throw;
    }
  }
  return next_ref;
}

void OffloadClient::alloc_buffer(std::uint64_t id, std::uint64_t size) {
  State s = state();
  if (s == State::Closed) throw Error(ErrorCode::ClientClosed);
  if (s == State::Connected) {
    try {
      call(wire::AllocBuffer{id, size});
      buffers_[id] = {Bytes(size, 0), tick(), false, true};
      return;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ConnectionLost) throw;
    }
  }
  if (buffers_.contains(id)) throw Error(ErrorCode::BufferExists, std::to_string(id));
  if (size > options_.local.max_buffer_bytes) throw Error(ErrorCode::ResourceLimit, std::to_string(size));
  buffers_[id] = {Bytes(size, 0), sync_clock_, true, false};
}

void OffloadClient::write_buffer(std::uint64_t id, std::uint64_t offset, const Bytes& data) {
  State s = state();
  if (s == State::Closed) throw Error(ErrorCode::ClientClosed);
  auto it = buffers_.find(id);
  if (s == State::Connected) {
    try {
      for (std::uint64_t pos = 0; pos < data.size() || pos == 0; pos += chunk_) {
        std::uint64_t n = std::min<std::uint64_t>(chunk_, data.size() - pos);
        auto first = data.begin() + static_cast<std::ptrdiff_t>(pos);
        call(wire::WriteBuffer{id, offset + pos, Bytes(first, first + static_cast<std::ptrdiff_t>(n))});
        if (data.empty()) break;
      }
      if (it != buffers_.end()) {
        std::copy(data.begin(), data.end(), it->second.data.begin() + static_cast<std::ptrdiff_t>(offset));
        it->second.sync_epoch = tick();
      }
      return;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ConnectionLost) throw;
    }
  }
  if (it == buffers_.end()) throw Error(ErrorCode::NoLocalMirror, "buffer " + std::to_string(id));
  check_range(it->second.data.size(), offset, data.size());
  std::copy(data.begin(), data.end(), it->second.data.begin() + static_cast<std::ptrdiff_t>(offset));
  it->second.dirty = true;
}

ReadResult OffloadClient::read_buffer(std::uint64_t id, std::uint64_t offset, std::uint32_t len) {
  State s = state();
  if (s == State::Closed) throw Error(ErrorCode::ClientClosed);
  if (s == State::Connected) {
    try {
      ReadResult r;
      for (std::uint64_t pos = 0; pos < len; pos += chunk_) {
        auto n = static_cast<std::uint32_t>(std::min<std::uint64_t>(chunk_, len - pos));
        auto part = std::get<wire::BufferData>(call(wire::ReadBuffer{id, offset + pos, n}));
        r.data.insert(r.data.end(), part.data.begin(), part.data.end());
      }
      if (len == 0) call(wire::ReadBuffer{id, offset, 0});
      return r;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ConnectionLost) throw;
    }
  }
  auto it = buffers_.find(id);
  if (it == buffers_.end()) throw Error(ErrorCode::NoLocalMirror, "buffer " + std::to_string(id));
  check_range(it->second.data.size(), offset, len);
  auto first = it->second.data.begin() + static_cast<std::ptrdiff_t>(offset);
  return {Bytes(first, first + len), Origin::LocalDegraded, Staleness{it->second.sync_epoch}};
}

DispatchResult OffloadClient::dispatch(std::uint64_t pipeline, exec::Groups groups,
                                       const std::vector<wire::BindingRef>& bindings) {
  State s = state();
  if (s == State::Closed) throw Error(ErrorCode::ClientClosed);
  auto pit = pipelines_.find(pipeline);
  if (pit == pipelines_.end()) throw Error(ErrorCode::UnknownPipeline, std::to_string(pipeline));

  if (s == State::Connected) {
    try {
      if (!pit->second.remote_id) throw Error(ErrorCode::UnknownPipeline, "not on the server");
      auto ack = std::get<wire::DispatchAck>(call(
          wire::Dispatch{*pit->second.remote_id, groups.x, groups.y, groups.z, bindings}));
      DispatchResult r;
      r.timing = {ack.prepare_ns, ack.execute_ns, ack.readback_ns};
      // Pull every bound buffer back so the mirror tracks the server.
      for (const auto& b : bindings) {
        auto bit = buffers_.find(b.buffer_id);
        if (bit == buffers_.end() || r.buffers.contains(b.buffer_id)) continue;
        Bytes fresh;
        const std::uint64_t size = bit->second.data.size();
        for (std::uint64_t pos = 0; pos < size; pos += chunk_) {
          auto n = static_cast<std::uint32_t>(std::min(chunk_, size - pos));
          auto part = std::get<wire::BufferData>(call(wire::ReadBuffer{b.buffer_id, pos, n}));
          fresh.insert(fresh.end(), part.data.begin(), part.data.end());
        }
        r.buffers[b.buffer_id] = std::move(fresh);
      }
      // Commit only once every read succeeded, so a disconnect halfway
      // through leaves the mirror at its pre-dispatch state for the local
      // rerun.
      std::uint64_t epoch = tick();
      for (const auto& [id, data] : r.buffers) {
        buffers_[id].data = data;
        buffers_[id].sync_epoch = epoch;
      }
      return r;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ConnectionLost) throw;
    }
  }
  return dispatch_local(pipeline, groups, bindings);
}

exec::PipelineHandle OffloadClient::local_pipeline(std::uint64_t ref) {
  auto cached = local_pipelines_.find(ref);
  if (cached != local_pipelines_.end()) return cached->second;
  const auto& p = pipelines_.at(ref);
  auto mit = modules_.find(p.module_hash);
  if (mit == modules_.end()) {
    throw Error(ErrorCode::NoLocalMirror, "module " + p.module_hash.hex() + " was never cached locally");
  }
  if (!mit->second.local_ok) throw Error(ErrorCode::BackendReject, mit->second.local_reject);
  auto handle = local_.create_pipeline(p.module_hash, p.entry);
  local_pipelines_[ref] = handle;
  return handle;
}

DispatchResult OffloadClient::dispatch_local(std::uint64_t pipeline, exec::Groups groups,
                                             const std::vector<wire::BindingRef>& bindings) {
  auto handle = local_pipeline(pipeline);
  exec::BufferMap bound;
  std::uint64_t oldest = UINT64_MAX;
  std::map<std::uint64_t, Bytes> before;
  for (const auto& b : bindings) {
    auto it = buffers_.find(b.buffer_id);
    if (it == buffers_.end()) {
      throw Error(ErrorCode::NoLocalMirror, "buffer " + std::to_string(b.buffer_id));
    }
    spirv::DescriptorSlot slot{b.set, b.binding};
    if (!bound.emplace(slot, std::span<std::uint8_t>(it->second.data)).second) {
      throw Error(ErrorCode::MalformedPayload, "slot bound twice");
    }
    oldest = std::min(oldest, it->second.sync_epoch);
    before.emplace(b.buffer_id, it->second.data);
  }

  DispatchResult r;
  r.timing = local_.dispatch(handle, groups, bound);
  r.origin = Origin::LocalDegraded;
  r.staleness = Staleness{bindings.empty() ? sync_clock_ : oldest};
  for (auto& [id, old] : before) {
    auto& m = buffers_.at(id);
    if (m.data != old) m.dirty = true;
    r.buffers[id] = m.data;
  }
  return r;
}

std::uint64_t OffloadClient::ping() {
  State s = state();
  if (s == State::Closed) throw Error(ErrorCode::ClientClosed);
  if (s != State::Connected) throw Error(ErrorCode::ConnectionLost, "degraded");
  try {
    return wire::measure_rtt(*channel_, session_, options_.request_timeout);
  } catch (const Error& e) {
    lost(e);
  }
}

bool OffloadClient::reconnect() {
  State s = state();
  if (s == State::Closed) throw Error(ErrorCode::ClientClosed);
  if (s == State::Connected) return true;
  if (channel_) channel_->close();

  bool restored_from_scratch = false;
  try {
    try {
      open_session(session());
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnknownSession) throw;
      // The server lost our session (restart); rebuild it from the mirror.
      open_session(std::nullopt);
      restored_from_scratch = true;
    }

    for (auto& [hash, m] : modules_) {
      if (restored_from_scratch || !m.uploaded) {
        call(wire::LoadModule{hash, m.bytes});
        m.uploaded = true;
      }
    }
    for (auto& [ref, p] : pipelines_) {
      if (restored_from_scratch || !p.remote_id) {
        p.remote_id = std::get<wire::PipelineAck>(call(wire::CreatePipeline{p.module_hash, p.entry})).pipeline_id;
      }
    }
    for (auto& [id, b] : buffers_) {
      const std::uint64_t size = b.data.size();
      if (restored_from_scratch || !b.remote_alloc) {
        try {
          call(wire::AllocBuffer{id, size});
        } catch (const Error& e) {
          if (e.code() != ErrorCode::BufferExists) throw;
        }
        b.remote_alloc = true;
      }
      if (b.dirty || restored_from_scratch) {
        // Local data is the newest writer: push it, flagged as produced
        // while degraded.
        std::uint16_t flags = b.dirty ? wire::kFlagDegraded : 0;
        for (std::uint64_t pos = 0; pos < size; pos += chunk_) {
          std::uint64_t n = std::min(chunk_, size - pos);
          auto first = b.data.begin() + static_cast<std::ptrdiff_t>(pos);
          call(wire::WriteBuffer{id, pos, Bytes(first, first + static_cast<std::ptrdiff_t>(n))}, flags);
        }
      } else {
        Bytes fresh;
        for (std::uint64_t pos = 0; pos < size; pos += chunk_) {
          auto n = static_cast<std::uint32_t>(std::min(chunk_, size - pos));
          auto part = std::get<wire::BufferData>(call(wire::ReadBuffer{id, pos, n}));
          fresh.insert(fresh.end(), part.data.begin(), part.data.end());
        }
        b.data = std::move(fresh);
      }
      b.dirty = false;
      b.sync_epoch = tick();
    }
  } catch (const Error& e) {
    log::info("reconnect failed: ", e.what());
    if (channel_) channel_->close();
    return false;
  }

  transition(State::Connected, restored_from_scratch ? "reconnected; session rebuilt from mirror"
                                                     : "reconnected; session resumed",
             Millis(0), 0);
  return true;
}

void OffloadClient::close() {
  stop_heartbeat();
  if (channel_) channel_->close();
  std::lock_guard lock(mu_);
  if (state_ != State::Closed) {
    events_.push_back({state_, State::Closed, "closed", Millis(0), 0});
    state_ = State::Closed;
  }
}

std::optional<Bytes> OffloadClient::mirrored_buffer(std::uint64_t id) const {
  auto it = buffers_.find(id);
  if (it == buffers_.end()) return std::nullopt;
  return it->second.data;
}

bool OffloadClient::has_mirrored_module(const Digest& hash) const { return modules_.contains(hash); }

ColdStartResult cold_start_local(const Bytes& module, const std::string& entry, exec::Groups groups,
                                 std::map<spirv::DescriptorSlot, Bytes> inputs,
                                 const exec::ExecutorOptions& options) {
  auto start = Clock::now();
  exec::InterpreterExecutor ex(options);
  auto m = spirv::SpirvModule::from_bytes(module);
  spirv::reflect(m);
  auto pipeline = ex.create_pipeline(ex.load(m), entry);
  exec::BufferMap bound;
  for (auto& [slot, bytes] : inputs) bound.emplace(slot, std::span<std::uint8_t>(bytes));
  ex.dispatch(pipeline, groups, bound);
  ColdStartResult r;
  r.outputs = std::move(inputs);
  r.elapsed_ns = ns_between(start, Clock::now());
  return r;
}

}  // namespace girp::client
