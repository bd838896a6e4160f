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

#include "girp/session/server.hpp"

#include <chrono>

#include "girp/error.hpp"
#include "girp/log.hpp"

namespace girp::session {
namespace {

using wire::Millis;

constexpr Millis kPoll(100);

bool is_zero(const wire::SessionId& id) {
  for (auto b : id) {
    if (b != 0) return false;
  }
  return true;
}

wire::ErrorMsg to_wire(const Error& e) {
  return {static_cast<std::uint16_t>(e.code()), e.detail()};
}

}  // namespace

Server::Server(ServerOptions options) : options_(std::move(options)) {}

Server::~Server() { stop(); }

void Server::start() {
  listener_ = std::make_unique<wire::TcpListener>(options_.listen);
  port_ = listener_->port();
  accept_thread_ = std::thread([this] { accept_loop(); });
  log::info("listening on ", options_.listen.host, ":", port_, " backend ",
            exec::backend_name(options_.session.backend));
}

void Server::stop() {
  if (stopping_.exchange(true)) return;
  if (accept_thread_.joinable()) accept_thread_.join();
  if (listener_) listener_->close();
  std::list<Connection> conns;
  {
    std::lock_guard lock(mu_);
    conns.splice(conns.end(), connections_);
  }
  for (auto& c : conns) c.channel->close();
  for (auto& c : conns) {
    if (c.thread.joinable()) c.thread.join();
  }
}

void Server::accept_loop() {
  while (!stopping_) {
    std::unique_ptr<wire::ByteStream> s;
    try {
      s = listener_->accept(kPoll);
    } catch (const Error& e) {
      log::warn("accept failed: ", e.what());
      continue;
    }
    if (s) serve(std::move(s));
    reap_finished();
  }
}

void Server::serve(std::unique_ptr<wire::ByteStream> stream) {
  std::lock_guard lock(mu_);
  if (stopping_) {
    stream->close();
    return;
  }
  log::debug("connection from ", stream->peer());
  auto& conn = connections_.emplace_back();
  conn.channel = std::make_unique<wire::FrameChannel>(std::move(stream));
  conn.channel->set_max_payload(options_.max_payload);
  conn.thread = std::thread([this, &conn] { run_connection(conn); });
}

void Server::reap_finished() {
  std::list<Connection> finished;
  {
    std::lock_guard lock(mu_);
    for (auto it = connections_.begin(); it != connections_.end();) {
      auto next = std::next(it);
      if (it->done) finished.splice(finished.end(), connections_, it);
      it = next;
    }
  }
  for (auto& c : finished) c.thread.join();
}

void Server::run_connection(Connection& conn) {
  auto& ch = *conn.channel;
  for (;;) {
    wire::FrameChannel::RawFrame raw;
    try {
      raw = ch.receive_raw(kPoll);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Timeout) {
        if (stopping_) break;
        continue;
      }
      if (e.code() != ErrorCode::ConnectionClosed) {
        // Header-level damage: framing is lost, so report once and hang up.
        log::warn("dropping ", ch.stream().peer(), ": ", e.what());
        try {
          ch.send(to_wire(e), {}, 0);
        } catch (const Error&) {
        }
      }
      break;
    }

    wire::Message response;
    try {
      auto request = wire::decode_payload(raw.header.msg_type, raw.payload);
      response = route(raw.header, request);
    } catch (const Error& e) {
      response = to_wire(e);
    }
    try {
      ch.send(response, raw.header.session, raw.header.request_id);
    } catch (const Error& e) {
      log::debug("send failed: ", e.what());
      break;
    }
  }
  ch.close();
  conn.done = true;
}

wire::Message Server::route(const wire::FrameHeader& header, const wire::Message& request) {
  using namespace wire;
  MsgType type = type_of(request);
  if (!is_request(type)) {
    throw Error(ErrorCode::UnexpectedMessage, std::string(msg_type_name(type)) + " from a client");
  }
  if (type == MsgType::Ping) return Pong{std::get<Ping>(request).echo_token};

  if (type == MsgType::Hello) {
    const auto& hello = std::get<Hello>(request);
    if (hello.spirv_min > hello.spirv_max) {
      throw Error(ErrorCode::MalformedPayload, "SPIR-V version range is inverted");
    }
    std::shared_ptr<Session> s;
    if (!is_zero(header.session)) {
      s = find(header.session);
      if (!s) throw Error(ErrorCode::UnknownSession, to_hex(header.session));
      log::info("resumed session ", to_hex(header.session));
    } else {
      s = std::make_shared<Session>(random_session_id(), options_.session);
      std::lock_guard lock(mu_);
      sessions_.emplace(s->id(), s);
      log::info("opened session ", to_hex(s->id()));
    }
    return s->handle(request);
  }

  if (type == MsgType::ImportSession) {
    const auto& snap = std::get<ImportSession>(request).snapshot;
    std::optional<SessionId> id;
    if (!is_zero(header.session)) id = header.session;
    std::shared_ptr<Session> s = Session::import_snapshot(snap, options_.session, id);
    {
      std::lock_guard lock(mu_);
      sessions_[s->id()] = s;
    }
    log::info("imported session ", to_hex(s->id()), " epoch ", s->epoch(), " in ",
              s->last_import_ns(), " ns");
    return Ack{s->epoch(), s->last_import_ns()};
  }

  auto s = find(header.session);
  if (!s) throw Error(ErrorCode::UnknownSession, to_hex(header.session));
  if (header.degraded()) {
    log::info("session ", to_hex(header.session), " receiving data produced in degraded mode");
  }
  return s->handle(request);
}

std::shared_ptr<Session> Server::find(const wire::SessionId& id) const {
  std::lock_guard lock(mu_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

std::size_t Server::session_count() const {
  std::lock_guard lock(mu_);
  return sessions_.size();
}

}  // namespace girp::session
