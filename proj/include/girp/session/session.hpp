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

#ifndef GIRP_SESSION_SESSION_HPP
#define GIRP_SESSION_SESSION_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "girp/executor/executor.hpp"
#include "girp/session/snapshot.hpp"
#include "girp/wire/message.hpp"

namespace girp::session {

struct SessionConfig {
  exec::Backend backend = exec::Backend::Interp;
  exec::ExecutorOptions executor;
};

wire::SessionId random_session_id();

// Server-side state for one client: content-addressed modules, pipelines
// and buffers, plus the executor that runs them. Requests are serialized by
// an internal mutex; every request either fully applies or leaves the
// state untouched.
class Session {
 public:
  /// Errors: BackendUnavailable.
  Session(const wire::SessionId& id, SessionConfig config);

  const wire::SessionId& id() const { return id_; }
  std::uint64_t epoch() const;

  /// Services one request. Failures come back as ErrorMsg, never as
  /// exceptions. EXPORT_SESSION answers ERROR(Busy) if another request is
  /// in flight; everything else waits its turn.
  wire::Message handle(const wire::Message& request);

  /// Errors: Busy.
  Bytes export_snapshot();

  /// Builds a session from a snapshot. The new session's epoch is the
  /// snapshot's plus one. `id` overrides the snapshot's id when non-null.
  /// Errors: DigestMismatch, FormatVersionUnsupported, BackendReject and
  /// the other parse_snapshot errors.
  static std::unique_ptr<Session> import_snapshot(ByteSpan snapshot, SessionConfig config,
                                                  const std::optional<wire::SessionId>& id = {});

  std::size_t module_count() const;
  std::size_t pipeline_count() const;
  std::size_t buffer_count() const;
  std::optional<Bytes> buffer(std::uint64_t id) const;

  std::uint64_t last_export_ns() const;
  std::uint64_t last_import_ns() const { return import_ns_; }

 private:
  struct Pipeline {
    Digest module_hash;
    std::string entry;
    exec::PipelineHandle handle;
  };

  wire::Message dispatch_request(const wire::Message& request);
  Snapshot capture() const;
  Bytes export_locked();

  wire::SessionId id_;
  SessionConfig config_;
  std::unique_ptr<exec::Executor> executor_;

  mutable std::mutex mu_;
  std::uint64_t epoch_ = 0;
  std::map<Digest, Bytes> modules_;
  std::map<std::uint64_t, Pipeline> pipelines_;
  std::map<std::uint64_t, Bytes> buffers_;
  std::uint64_t next_pipeline_ = 1;
  std::uint64_t export_ns_ = 0;
  std::uint64_t import_ns_ = 0;
};

}  // namespace girp::session

#endif  // GIRP_SESSION_SESSION_HPP
