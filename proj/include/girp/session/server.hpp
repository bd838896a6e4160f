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

#ifndef GIRP_SESSION_SERVER_HPP
#define GIRP_SESSION_SERVER_HPP

#include <atomic>
#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

#include "girp/session/session.hpp"
#include "girp/wire/transport.hpp"

namespace girp::session {

struct ServerOptions {
  wire::Endpoint listen{"127.0.0.1", wire::kDefaultPort};
  SessionConfig session;
  std::uint32_t max_payload = wire::kMaxPayload;  // per-frame cap, both directions
};

// Accepts connections and routes each frame to the session named in its
// header. HELLO with a zero session id opens a new session; with a known id
// it resumes that session. IMPORT_SESSION installs a snapshot under the
// frame's session id (or the snapshot's own id when the frame carries
// zero), replacing any session already there. Each connection gets its own
// thread; sessions are shared between connections.
class Server {
 public:
  explicit Server(ServerOptions options);
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Binds and starts accepting. Errors: IoError.
  void start();
  /// Closes the listener and every connection, then joins all threads.
  void stop();
  std::uint16_t port() const { return port_; }

  /// Serves an already-connected stream (in-process pipes in tests).
  void serve(std::unique_ptr<wire::ByteStream> stream);

  std::shared_ptr<Session> find(const wire::SessionId& id) const;
  std::size_t session_count() const;

 private:
  struct Connection {
    std::unique_ptr<wire::FrameChannel> channel;
    std::thread thread;
    std::atomic<bool> done{false};
  };

  void accept_loop();
  void run_connection(Connection& conn);
  wire::Message route(const wire::FrameHeader& header, const wire::Message& request);
  void reap_finished();

  ServerOptions options_;
  std::unique_ptr<wire::TcpListener> listener_;
  std::uint16_t port_ = 0;
  std::thread accept_thread_;
  std::atomic<bool> stopping_{false};

  mutable std::mutex mu_;
  std::map<wire::SessionId, std::shared_ptr<Session>> sessions_;
  std::list<Connection> connections_;
};

}  // namespace girp::session

#endif  // GIRP_SESSION_SERVER_HPP
