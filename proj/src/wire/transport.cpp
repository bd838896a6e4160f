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

#include "girp/wire/transport.hpp"

#include <arpa/inet.h>
#include <fcntl.h>
#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <charconv>
#include <condition_variable>
#include <cstring>
#include <deque>
#include <mutex>
#include <random>

#include "girp/error.hpp"

namespace girp::wire {
namespace {

using Clock = std::chrono::steady_clock;

[[noreturn]] void throw_errno(const std::string& what) {
  throw Error(ErrorCode::IoError, what + ": " + std::strerror(errno));
}

int remaining_ms(Clock::time_point deadline) {
  auto left = std::chrono::ceil<Millis>(deadline - Clock::now()).count();
  return static_cast<int>(std::clamp<long long>(left, 0, 1 << 30));
}

// One direction of an in-process pipe.
struct PipeBuffer {
  std::mutex mu;
  std::condition_variable cv;
  std::deque<std::uint8_t> data;
  bool closed = false;
};

class PipeStream final : public ByteStream {
 public:
  PipeStream(std::shared_ptr<PipeBuffer> in, std::shared_ptr<PipeBuffer> out, std::string name)
      : in_(std::move(in)), out_(std::move(out)), name_(std::move(name)) {}
  ~PipeStream() override { close(); }

  void write_all(ByteSpan bytes) override {
    std::lock_guard lock(out_->mu);
    if (out_->closed) throw Error(ErrorCode::ConnectionClosed, name_);
    out_->data.insert(out_->data.end(), bytes.begin(), bytes.end());
    out_->cv.notify_all();
  }

  std::size_t read_some(std::uint8_t* dst, std::size_t max, Millis timeout) override {
    std::unique_lock lock(in_->mu);
    if (!in_->cv.wait_for(lock, timeout, [&] { return !in_->data.empty() || in_->closed; })) {
      throw Error(ErrorCode::Timeout, "no data from " + name_);
    }
    if (in_->data.empty()) throw Error(ErrorCode::ConnectionClosed, name_);
    std::size_t n = std::min(max, in_->data.size());
    std::copy_n(in_->data.begin(), n, dst);
    in_->data.erase(in_->data.begin(), in_->data.begin() + static_cast<std::ptrdiff_t>(n));
    return n;
  }

  void close() override {
    for (auto* b : {in_.get(), out_.get()}) {
      std::lock_guard lock(b->mu);
      b->closed = true;
      b->cv.notify_all();
    }
  }

  std::string peer() const override { return name_; }

 private:
  std::shared_ptr<PipeBuffer> in_, out_;
  std::string name_;
};

class TcpStream final : public ByteStream {
 public:
  TcpStream(int fd, std::string peer) : fd_(fd), peer_(std::move(peer)) {
    int one = 1;
    ::setsockopt(fd_, IPPROTO_TCP, TCP_NODELAY, &one, sizeof one);
  }
  ~TcpStream() override {
    close();
    ::close(fd_);
  }

  void write_all(ByteSpan bytes) override {
    std::size_t sent = 0;
    while (sent < bytes.size()) {
      if (closed_) throw Error(ErrorCode::ConnectionClosed, peer_);
      ssize_t n = ::send(fd_, bytes.data() + sent, bytes.size() - sent, MSG_NOSIGNAL);
      if (n < 0) {
        if (errno == EINTR) continue;
        if (errno == EPIPE || errno == ECONNRESET) throw Error(ErrorCode::ConnectionClosed, peer_);
        throw_errno("send to " + peer_);
      }
      sent += static_cast<std::size_t>(n);
    }
  }

  std::size_t read_some(std::uint8_t* dst, std::size_t max, Millis timeout) override {
    auto deadline = Clock::now() + timeout;
    for (;;) {
      if (closed_) throw Error(ErrorCode::ConnectionClosed, peer_);
      pollfd p{fd_, POLLIN, 0};
      // Short slices so a close() from another thread is noticed promptly.
      int wait = std::min(remaining_ms(deadline), 50);
      int rc = ::poll(&p, 1, wait);
      if (rc < 0) {
        if (errno == EINTR) continue;
        throw_errno("poll " + peer_);
      }
      if (rc == 0) {
        if (Clock::now() >= deadline) throw Error(ErrorCode::Timeout, "no data from " + peer_);
        continue;
      }
      ssize_t n = ::recv(fd_, dst, max, 0);
      if (n > 0) return static_cast<std::size_t>(n);
      if (n == 0) throw Error(ErrorCode::ConnectionClosed, peer_);
      if (errno == EINTR || errno == EAGAIN) continue;
      if (errno == ECONNRESET) throw Error(ErrorCode::ConnectionClosed, peer_);
      throw_errno("recv from " + peer_);
    }
  }

  void close() override {
    if (!closed_.exchange(true)) ::shutdown(fd_, SHUT_RDWR);
  }

  std::string peer() const override { return peer_; }

 private:
  int fd_;
  std::string peer_;
  std::atomic<bool> closed_{false};
};

sockaddr_in resolve(const Endpoint& ep) {
  addrinfo hints{};
  hints.ai_family = AF_INET;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* res = nullptr;
  std::string host = ep.host.empty() ? "0.0.0.0" : ep.host;
  int rc = ::getaddrinfo(host.c_str(), nullptr, &hints, &res);
  if (rc != 0 || res == nullptr) {
    throw Error(ErrorCode::IoError, "cannot resolve " + host + ": " + ::gai_strerror(rc));
  }
  sockaddr_in addr{};
  std::memcpy(&addr, res->ai_addr, sizeof addr);
  ::freeaddrinfo(res);
  addr.sin_port = htons(ep.port);
  return addr;
}

std::string describe(const sockaddr_in& addr) {
  char buf[INET_ADDRSTRLEN] = {};
  ::inet_ntop(AF_INET, &addr.sin_addr, buf, sizeof buf);
  return std::string(buf) + ":" + std::to_string(ntohs(addr.sin_port));
}

}  // namespace

std::pair<std::unique_ptr<ByteStream>, std::unique_ptr<ByteStream>> make_pipe() {
  auto ab = std::make_shared<PipeBuffer>();
  auto ba = std::make_shared<PipeBuffer>();
  return {std::make_unique<PipeStream>(ba, ab, "pipe:a"),
          std::make_unique<PipeStream>(ab, ba, "pipe:b")};
}

Endpoint parse_endpoint(const std::string& text) {
  Endpoint ep;
  auto colon = text.rfind(':');
  if (colon == std::string::npos) {
    if (!text.empty()) ep.host = text;
    return ep;
  }
  if (colon > 0) ep.host = text.substr(0, colon);
  std::string port = text.substr(colon + 1);
  unsigned value = 0;
  auto [end, ec] = std::from_chars(port.data(), port.data() + port.size(), value);
  if (port.empty() || ec != std::errc() || end != port.data() + port.size() || value > 65535) {
    throw Error(ErrorCode::ConfigError, "bad port in '" + text + "'");
  }
  ep.port = static_cast<std::uint16_t>(value);
  return ep;
}

std::unique_ptr<ByteStream> connect_tcp(const Endpoint& endpoint, Millis timeout) {
  sockaddr_in addr = resolve(endpoint);
  int fd = ::socket(AF_INET, SOCK_STREAM | SOCK_CLOEXEC, 0);
  if (fd < 0) throw_errno("socket");
  int flags = ::fcntl(fd, F_GETFL, 0);
  ::fcntl(fd, F_SETFL, flags | O_NONBLOCK);
  int rc = ::connect(fd, reinterpret_cast<sockaddr*>(&addr), sizeof addr);
  if (rc < 0 && errno != EINPROGRESS) {
    int err = errno;
    ::close(fd);
    errno = err;
    throw_errno("connect " + endpoint.to_string());
  }
  if (rc < 0) {
    pollfd p{fd, POLLOUT, 0};
    rc = ::poll(&p, 1, static_cast<int>(timeout.count()));
    if (rc == 0) {
      ::close(fd);
      throw Error(ErrorCode::Timeout, "connect " + endpoint.to_string());
    }
    int err = 0;
    socklen_t len = sizeof err;
    ::getsockopt(fd, SOL_SOCKET, SO_ERROR, &err, &len);
    if (rc < 0 || err != 0) {
      ::close(fd);
      errno = err;
      throw_errno("connect " + endpoint.to_string());
    }
  }
  ::fcntl(fd, F_SETFL, flags);
  return std::make_unique<TcpStream>(fd, describe(addr));
}

TcpListener::TcpListener(const Endpoint& endpoint) {
  sockaddr_in addr = resolve(endpoint);
  fd_ = ::socket(AF_INET, SOCK_STREAM | SOCK_CLOEXEC, 0);
  if (fd_ < 0) throw_errno("socket");
  int one = 1;
  ::setsockopt(fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);
  if (::bind(fd_, reinterpret_cast<sockaddr*>(&addr), sizeof addr) < 0 || ::listen(fd_, 64) < 0) {
    int err = errno;
    ::close(fd_);
    errno = err;
    throw_errno("listen on " + endpoint.to_string());
  }
  socklen_t len = sizeof addr;
  ::getsockname(fd_, reinterpret_cast<sockaddr*>(&addr), &len);
  port_ = ntohs(addr.sin_port);
}

TcpListener::~TcpListener() {
  close();
}

std::unique_ptr<ByteStream> TcpListener::accept(Millis timeout) {
  if (fd_ < 0) return nullptr;
  pollfd p{fd_, POLLIN, 0};
  int rc = ::poll(&p, 1, static_cast<int>(timeout.count()));
  if (rc <= 0 || fd_ < 0) return nullptr;
  sockaddr_in peer{};
  socklen_t len = sizeof peer;
  int fd = ::accept4(fd_, reinterpret_cast<sockaddr*>(&peer), &len, SOCK_CLOEXEC);
  if (fd < 0) {
    if (errno == EAGAIN || errno == EINTR || errno == ECONNABORTED) return nullptr;
    throw_errno("accept");
  }
  return std::make_unique<TcpStream>(fd, describe(peer));
}

void TcpListener::close() {
  if (fd_ >= 0) {
    ::close(fd_);
    fd_ = -1;
  }
}

FrameChannel::FrameChannel(std::unique_ptr<ByteStream> stream) : stream_(std::move(stream)) {}

void FrameChannel::set_max_payload(std::uint32_t bytes) {
  if (bytes == 0 || bytes > kMaxPayload) {
    throw Error(ErrorCode::ConfigError, "frame payload cap must be in [1, " + std::to_string(kMaxPayload) + "]");
  }
  max_payload_ = bytes;
}

void FrameChannel::send(const Message& message, const SessionId& session,
                        std::uint64_t request_id, std::uint16_t flags) {
  Bytes frame = encode(message, session, request_id, flags);
  if (frame.size() - kHeaderSize > max_payload_) {
    throw Error(ErrorCode::Oversize, std::to_string(frame.size() - kHeaderSize) + " byte payload exceeds cap " +
                                         std::to_string(max_payload_));
  }
  stream_->write_all(frame);
}

void FrameChannel::send_raw(ByteSpan frame) { stream_->write_all(frame); }

void FrameChannel::fill(std::size_t want, Clock::time_point deadline) {
  std::uint8_t chunk[64 * 1024];
  while (pending_.size() < want) {
    auto left = std::max(Millis(0), std::chrono::ceil<Millis>(deadline - Clock::now()));
    std::size_t n = stream_->read_some(chunk, std::min(sizeof chunk, want - pending_.size()), left);
    pending_.insert(pending_.end(), chunk, chunk + n);
  }
}

FrameChannel::RawFrame FrameChannel::receive_raw(Millis timeout) {
  auto deadline = Clock::now() + timeout;
  fill(kHeaderSize, deadline);
  RawFrame f;
  f.header = decode_header(pending_);
  if (f.header.payload_len > max_payload_) {
    throw Error(ErrorCode::Oversize, std::to_string(f.header.payload_len) + " byte payload exceeds cap " +
                                         std::to_string(max_payload_));
  }
  fill(kHeaderSize + f.header.payload_len, deadline);
  f.payload.assign(pending_.begin() + kHeaderSize, pending_.end());
  pending_.clear();
  return f;
}

Frame FrameChannel::receive(Millis timeout) {
  RawFrame raw = receive_raw(timeout);
  return Frame{raw.header, decode_payload(raw.header.msg_type, raw.payload)};
}

std::uint64_t measure_rtt(FrameChannel& channel, const SessionId& session, Millis timeout) {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  std::uint64_t token = rng();
  auto start = Clock::now();
  auto deadline = start + timeout;
  channel.send(Ping{token}, session, token);
  for (;;) {
    auto left = std::chrono::ceil<Millis>(deadline - Clock::now());
    if (left.count() <= 0) throw Error(ErrorCode::Timeout, "no PONG within " + std::to_string(timeout.count()) + " ms");
    Frame f = channel.receive(left);
    const auto* pong = std::get_if<Pong>(&f.message);
    if (pong != nullptr && pong->echo_token == token) {
      return static_cast<std::uint64_t>(
          std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count());
    }
  }
}

}  // namespace girp::wire
