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

#ifndef GIRP_WIRE_TRANSPORT_HPP
#define GIRP_WIRE_TRANSPORT_HPP

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "girp/bytes.hpp"
#include "girp/wire/message.hpp"

namespace girp::wire {

using Millis = std::chrono::milliseconds;

// A reliable ordered byte stream. One reader and one writer may use a stream
// concurrently; close() may be called from any thread and wakes both.
class ByteStream {
 public:
  virtual ~ByteStream() = default;

  /// Errors: ConnectionClosed, IoError.
  virtual void write_all(ByteSpan data) = 0;
  /// Blocks until at least one byte is available or the timeout passes.
  /// Errors: Timeout, ConnectionClosed (peer closed and nothing buffered), IoError.
  virtual std::size_t read_some(std::uint8_t* out, std::size_t max, Millis timeout) = 0;
  virtual void close() = 0;
  virtual std::string peer() const = 0;
};

/// Two connected in-process streams.
std::pair<std::unique_ptr<ByteStream>, std::unique_ptr<ByteStream>> make_pipe();

struct Endpoint {
  std::string host = "127.0.0.1";
  std::uint16_t port = kDefaultPort;

  std::string to_string() const { return host + ":" + std::to_string(port); }
};

/// "host:port", "host" (default port) or ":port".
/// Errors: ConfigError.
Endpoint parse_endpoint(const std::string& text);

/// Errors: IoError, Timeout.
std::unique_ptr<ByteStream> connect_tcp(const Endpoint& endpoint, Millis timeout = Millis(2000));

class TcpListener {
 public:
  /// Port 0 picks an ephemeral port. Errors: IoError.
  explicit TcpListener(const Endpoint& endpoint);
  ~TcpListener();
  TcpListener(const TcpListener&) = delete;
  TcpListener& operator=(const TcpListener&) = delete;

  std::uint16_t port() const { return port_; }
  /// nullptr on timeout or after close(). Errors: IoError.
  std::unique_ptr<ByteStream> accept(Millis timeout);
  void close();

 private:
  int fd_ = -1;
  std::uint16_t port_ = 0;
};

// Frames over a byte stream. Bytes of a partially received frame survive a
// receive timeout and are completed by the next call.
class FrameChannel {
 public:
  explicit FrameChannel(std::unique_ptr<ByteStream> stream);

  void send(const Message& message, const SessionId& session, std::uint64_t request_id,
            std::uint16_t flags = 0);
  void send_raw(ByteSpan frame);

  struct RawFrame {
    FrameHeader header;
    Bytes payload;
  };
  /// One complete frame with a validated header but undecoded payload.
  /// Errors: Timeout, ConnectionClosed, BadMagic, BadVersion, Oversize
  /// (beyond max_payload()).
  RawFrame receive_raw(Millis timeout);
  /// receive_raw + decode_payload.
  Frame receive(Millis timeout);

  void close() { stream_->close(); }
  ByteStream& stream() { return *stream_; }

  /// Lowers the payload cap for both directions below the protocol maximum.
  /// Errors: ConfigError.
  void set_max_payload(std::uint32_t bytes);
  std::uint32_t max_payload() const { return max_payload_; }

 private:
  void fill(std::size_t want, std::chrono::steady_clock::time_point deadline);

  std::unique_ptr<ByteStream> stream_;
  Bytes pending_;
  std::uint32_t max_payload_ = kMaxPayload;
};

/// Sends PING with a fresh token and waits for the PONG carrying it; other
/// frames are discarded. Returns the round-trip time in nanoseconds.
/// Errors: Timeout, ConnectionClosed.
std::uint64_t measure_rtt(FrameChannel& channel, const SessionId& session,
                          Millis timeout = Millis(1000));

}  // namespace girp::wire

#endif  // GIRP_WIRE_TRANSPORT_HPP
