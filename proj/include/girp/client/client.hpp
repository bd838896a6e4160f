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

#ifndef GIRP_CLIENT_CLIENT_HPP
#define GIRP_CLIENT_CLIENT_HPP

#include <atomic>
#include <condition_variable>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "girp/error.hpp"
#include "girp/executor/executor.hpp"
#include "girp/wire/message.hpp"
#include "girp/wire/transport.hpp"

namespace girp::client {

using wire::Millis;

enum class State { Connected, Degraded, Closed };
enum class Origin { Remote, LocalDegraded };

std::string_view state_name(State state);
std::string_view origin_name(Origin origin);

struct HeartbeatConfig {
  Millis interval{100};
  int miss_threshold = 3;
};

struct StateEvent {
  State from = State::Connected;
  State to = State::Connected;
  std::string reason;
  /// miss_threshold x interval, for heartbeat-driven transitions.
  Millis nominal_detection{0};
  /// From the first unanswered heartbeat (or failed request) to the
  /// transition.
  std::uint64_t detection_ns = 0;
};

// Attached to every result served from the local mirror.
struct Staleness {
  /// Oldest sync epoch among the buffers the result was computed from.
  std::uint64_t sync_epoch = 0;
};

struct DispatchResult {
  std::map<std::uint64_t, Bytes> buffers;  // contents of every bound buffer afterwards
  exec::TimingBreakdown timing;
  Origin origin = Origin::Remote;
  std::optional<Staleness> staleness;
};

struct ReadResult {
  Bytes data;
  Origin origin = Origin::Remote;
  std::optional<Staleness> staleness;
};

/// Opens a fresh stream to the server; called once per connection attempt.
using Connector = std::function<std::unique_ptr<wire::ByteStream>()>;

struct ClientOptions {
  HeartbeatConfig heartbeat;
  bool heartbeat_enabled = true;
  Millis request_timeout{5000};
  exec::ExecutorOptions local;
  std::uint32_t max_payload = wire::kMaxPayload;  // per-frame cap; transfers are chunked below it
  /// Join an existing server session instead of opening a new one.
  std::optional<wire::SessionId> resume_session;
};

// UE-side offload runtime. Work runs on the server while Connected. Every
// acknowledged module, pipeline and buffer write is mirrored locally, so
// after a disconnect the same calls keep working against the mirror with
// origin LocalDegraded and a staleness marker. reconnect() resyncs with
// last-writer-wins per buffer: buffers written locally while degraded are
// uploaded (flagged DEGRADED on the wire), all others are re-read from the
// server.
//
// State changes only through heartbeat-detected or request-detected
// disconnects, reconnect() and close(). One thread drives the client; the
// heartbeat runs on an internal thread.
class OffloadClient {
 public:
  /// Connects and says HELLO. Errors: IoError, Timeout, UnknownSession.
  OffloadClient(Connector connector, ClientOptions options = {});
  ~OffloadClient();
  OffloadClient(const OffloadClient&) = delete;
  OffloadClient& operator=(const OffloadClient&) = delete;

  static std::unique_ptr<OffloadClient> connect(const wire::Endpoint& server,
                                                ClientOptions options = {});

  State state() const;
  wire::SessionId session() const;
  std::string server_capabilities() const;
  std::vector<StateEvent> drain_events();

  /// Returns the content hash. A module the local interpreter cannot host
  /// is still offloaded, with a warning; degraded dispatches on it fail.
  Digest load_module(const Bytes& module);
  /// Returns a pipeline reference; equal to the server's id when created
  /// while connected.
  std::uint64_t create_pipeline(const Digest& module_hash, const std::string& entry);
  void alloc_buffer(std::uint64_t id, std::uint64_t size);
  void write_buffer(std::uint64_t id, std::uint64_t offset, const Bytes& data);
  ReadResult read_buffer(std::uint64_t id, std::uint64_t offset, std::uint32_t len);
  /// Errors: NoLocalMirror and BackendReject when degraded; server errors
  /// when connected.
  DispatchResult dispatch(std::uint64_t pipeline, exec::Groups groups,
                          const std::vector<wire::BindingRef>& bindings);

  /// Round trip on the main connection. Errors: Timeout, ConnectionLost.
  std::uint64_t ping();

  /// Degraded -> Connected. Returns false, staying Degraded, when the server
  /// is unreachable.
  bool reconnect();
  void close();

  /// Mirror introspection, for tests and the script runner.
  std::optional<Bytes> mirrored_buffer(std::uint64_t id) const;
  bool has_mirrored_module(const Digest& hash) const;

 private:
  struct ModuleMirror {
    Bytes bytes;
    bool local_ok = false;
    std::string local_reject;
    bool uploaded = false;
  };
  struct PipelineMirror {
    Digest module_hash;
    std::string entry;
    std::optional<std::uint64_t> remote_id;
  };
  struct BufferMirror {
    Bytes data;
    std::uint64_t sync_epoch = 0;
    bool dirty = false;       // written locally since the last sync
    bool remote_alloc = true; // exists on the server
  };

  void open_session(std::optional<wire::SessionId> resume);
  wire::Message call(const wire::Message& request, std::uint16_t flags = 0);
  [[noreturn]] void lost(const Error& cause);
  void transition(State to, const std::string& reason, Millis nominal, std::uint64_t detection_ns);
  void heartbeat_loop();
  void stop_heartbeat();
  void start_heartbeat();
  exec::PipelineHandle local_pipeline(std::uint64_t ref);
  DispatchResult dispatch_local(std::uint64_t pipeline, exec::Groups groups,
                                const std::vector<wire::BindingRef>& bindings);
  std::uint64_t tick() { return ++sync_clock_; }

  Connector connector_;
  ClientOptions options_;

  // Guarded by mu_: state, events, session id. The heartbeat thread only
  // touches these.
  mutable std::mutex mu_;
  std::condition_variable cv_;
  State state_ = State::Connected;
  std::vector<StateEvent> events_;
  wire::SessionId session_{};
  std::string capabilities_;
  bool heartbeat_stop_ = false;
  std::thread heartbeat_;

  // Owned by the driving thread.
  std::unique_ptr<wire::FrameChannel> channel_;
  std::uint64_t next_request_ = 1;
  std::uint64_t chunk_ = 0;  // largest buffer slice per frame
  std::uint64_t sync_clock_ = 0;
  std::map<Digest, ModuleMirror> modules_;
  std::map<std::uint64_t, PipelineMirror> pipelines_;
  std::map<std::uint64_t, BufferMirror> buffers_;
  exec::InterpreterExecutor local_;
  std::map<std::uint64_t, exec::PipelineHandle> local_pipelines_;
};

struct ColdStartResult {
  std::map<spirv::DescriptorSlot, Bytes> outputs;
  std::uint64_t elapsed_ns = 0;
};

/// Starts a program from nothing on the local interpreter: reflect, load,
/// pipeline, dispatch and readback, timed as one span on the monotonic
/// clock. Errors: reflection errors, BackendReject, interpreter traps.
ColdStartResult cold_start_local(const Bytes& module, const std::string& entry, exec::Groups groups,
                                 std::map<spirv::DescriptorSlot, Bytes> inputs,
                                 const exec::ExecutorOptions& options = {});

}  // namespace girp::client

#endif  // GIRP_CLIENT_CLIENT_HPP
