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

#include <gtest/gtest.h>

#include <set>
#include <thread>

#include "girp/fixtures.hpp"
#include "girp/wire/message.hpp"
#include "girp/wire/transport.hpp"
#include "support/random_messages.hpp"
#include "support/test_util.hpp"

namespace girp::wire {
namespace {

using girp::testing::MessageGen;
using girp::testing::read_file;

Bytes golden(const std::string& name) {
  Bytes b = read_file(std::string(GIRP_GOLDEN_DIR "/") + name + ".bin");
  EXPECT_FALSE(b.empty()) << "missing golden " << name;
  return b;
}

SessionId golden_session() {
  SessionId s;
  for (int i = 0; i < 16; ++i) s[i] = static_cast<std::uint8_t>(0x10 + i);
  return s;
}

Digest golden_hash() {
  Digest d;
  for (int i = 0; i < 32; ++i) d.bytes[i] = static_cast<std::uint8_t>(0xA0 + i);
  return d;
}

constexpr std::uint64_t kGoldenRequest = 0x0102030405060708;

TEST(WireGolden, PingFrameIs46Bytes) {
  Bytes frame = encode(Ping{0}, SessionId{}, 1);
  ASSERT_EQ(frame.size(), 46u);
  EXPECT_EQ(to_hex(frame),
            "4749525001100000" "0000"
            "00000000000000000000000000000000"
            "0100000000000000" "08000000" "0000000000000000");
  EXPECT_EQ(frame, golden("ping"));
}

struct GoldenCase {
  const char* name;
  Message message;
  std::uint16_t flags = 0;
};

TEST(WireGolden, EveryMessageTypeMatchesByteForByte) {
  const GoldenCase cases[] = {
      {"hello", Hello{ClientKind::Ue, 0x00010000, 0x00010600, "interp"}},
      {"hello_ack", HelloAck{golden_session(), "name=reference-interp;spirv=subset"}},
      {"load_module", LoadModule{golden_hash(), {0x03, 0x02, 0x23, 0x07, 0, 0, 1, 0}}},
      {"module_ack", ModuleAck{golden_hash(), true}},
      {"create_pipeline", CreatePipeline{golden_hash(), "main"}},
      {"pipeline_ack", PipelineAck{7}},
      {"alloc_buffer", AllocBuffer{2, 262144}},
      {"write_buffer", WriteBuffer{2, 16, {0xde, 0xad, 0xbe, 0xef}}},
      {"dispatch", Dispatch{7, 1024, 1, 1, {{0, 0, 1}, {0, 1, 2}}}},
      {"dispatch_ack", DispatchAck{1000, 2000000, 3000}},
      {"read_buffer", ReadBuffer{2, 0, 64}},
      {"buffer_data", BufferData{{0, 1, 2, 3, 4, 5, 6, 7}}},
      {"export_session", ExportSession{}},
      {"session_snapshot", SessionSnapshot{{'s', 'n', 'a', 'p', 's', 'h', 'o', 't'}}},
      {"import_session", ImportSession{{'s', 'n', 'a', 'p', 's', 'h', 'o', 't'}}},
      {"pong", Pong{0xFEEDFACECAFEBEEF}},
      {"error", ErrorMsg{0x0040, "read past end"}},
      {"ack", Ack{5, 123456}},
      {"ping_degraded", Ping{9}, kFlagDegraded},
  };
  std::set<MsgType> covered = {MsgType::Ping};
  for (const auto& c : cases) {
    SCOPED_TRACE(c.name);
    Bytes expected = golden(c.name);
    EXPECT_EQ(to_hex(encode(c.message, golden_session(), kGoldenRequest, c.flags)), to_hex(expected));
    Frame f = decode(expected);
    EXPECT_EQ(f.message, c.message);
    EXPECT_EQ(f.header.session, golden_session());
    EXPECT_EQ(f.header.request_id, kGoldenRequest);
    EXPECT_EQ(f.header.flags, c.flags);
    covered.insert(type_of(c.message));
  }
  EXPECT_EQ(covered.size(), std::size_t{girp::testing::kLastMsgType});
}

TEST(WireRoundTrip, RandomizedThousandPerType) {
  MessageGen gen(2026);
  for (std::uint8_t t = girp::testing::kFirstMsgType; t <= girp::testing::kLastMsgType; ++t) {
    auto type = static_cast<MsgType>(t);
    for (int i = 0; i < 1000; ++i) {
      Message m = gen.message(type);
      ASSERT_EQ(type_of(m), type);
      SessionId s = gen.session();
      std::uint64_t rid = gen.u64();
      auto flags = static_cast<std::uint16_t>(gen.u16() & kFlagDegraded);
      Bytes bytes = encode(m, s, rid, flags);
      Frame f = decode(bytes);
      ASSERT_EQ(f.message, m) << msg_type_name(type) << " case " << i;
      ASSERT_EQ(f.header.session, s);
      ASSERT_EQ(f.header.request_id, rid);
      ASSERT_EQ(f.header.flags, flags);
      ASSERT_EQ(bytes.size(), kHeaderSize + f.header.payload_len);
    }
  }
}

TEST(WireRoundTrip, FixtureModule) {
  LoadModule m{fixtures::module(fixtures::Kernel::Multiply).content_hash(),
               fixtures::bytes(fixtures::Kernel::Multiply)};
  EXPECT_EQ(decode(encode(m, {}, 3)).message, Message(m));
}

TEST(WireEncode, ReservedFlagBitsAreClearedBothWays) {
  Bytes b = encode(Ping{1}, {}, 1, 0xfffe);
  EXPECT_EQ(b[6], 0);
  EXPECT_EQ(b[7], 0);
  b[6] = 0xff;
  b[7] = 0xff;
  b[8] = 0x12;  // reserved u16
  EXPECT_EQ(decode(b).header.flags, kFlagDegraded);
}

TEST(WireEncode, Oversize) {
  WriteBuffer big{1, 0, Bytes(65u << 20)};
  EXPECT_GIRP_ERROR(encode(big, {}, 1), ErrorCode::Oversize);
  WriteBuffer at_limit{1, 0, Bytes(kMaxPayload - 20)};
  EXPECT_EQ(encode(at_limit, {}, 1).size(), kHeaderSize + kMaxPayload);
}

TEST(WireDecode, Errors) {
  Bytes ping = golden("ping");

  Bytes bad_magic = ping;
  bad_magic[0] ^= 0xff;
  EXPECT_GIRP_ERROR(decode(bad_magic), ErrorCode::BadMagic);

  Bytes bad_version = ping;
  bad_version[4] = 2;
  EXPECT_GIRP_ERROR(decode(bad_version), ErrorCode::BadVersion);

  Bytes unknown = ping;
  unknown[5] = 0x7f;
  try {
    decode(unknown);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownMsgType);
    EXPECT_EQ(e.detail(), "0x7f");
  }
  // The header alone still parses so the receiver can answer with ERROR.
  EXPECT_EQ(decode_header(unknown).msg_type, 0x7f);

  EXPECT_GIRP_ERROR(decode(ByteSpan(ping).first(30)), ErrorCode::Truncated);
  EXPECT_GIRP_ERROR(decode(ByteSpan(ping).first(45)), ErrorCode::Truncated);

  Bytes trailing = ping;
  trailing.push_back(0);
  EXPECT_GIRP_ERROR(decode(trailing), ErrorCode::TrailingBytes);

  // payload_len longer than the PING body: the inner parse leaves bytes over.
  Bytes long_payload = ping;
  long_payload[34] = 9;
  long_payload.push_back(0);
  EXPECT_GIRP_ERROR(decode(long_payload), ErrorCode::TrailingBytes);

  Bytes huge = ping;
  store_le32(huge.data() + 34, kMaxPayload + 1);
  EXPECT_GIRP_ERROR(decode(huge), ErrorCode::Oversize);

  Bytes bad_bool = golden("module_ack");
  bad_bool.back() = 2;
  EXPECT_GIRP_ERROR(decode(bad_bool), ErrorCode::MalformedPayload);
}

TEST(WireDecode, DispatchPromisingMoreBindingsThanPresent) {
  Dispatch d{1, 1, 1, 1, {{0, 0, 1}, {0, 1, 2}}};
  Bytes b = encode(d, {}, 1);
  // Binding count sits after pipeline_id and the three group counts.
  b[kHeaderSize + 20] = 3;
  EXPECT_GIRP_ERROR(decode(b), ErrorCode::Truncated);
}

TEST(WireDecode, RandomBytesNeverEscapeTheErrorRegistry) {
  MessageGen gen(5);
  auto& rng = gen.rng();
  Bytes valid = encode(Dispatch{1, 2, 3, 4, {{0, 0, 1}}}, {}, 9);
  for (int i = 0; i < 20000; ++i) {
    Bytes b = (i % 2) ? gen.bytes(80) : valid;
    if (i % 2 == 0) {
      for (int k = 0; k < 3; ++k) b[rng() % b.size()] = static_cast<std::uint8_t>(rng());
    } else if (b.size() >= 6) {
      std::copy_n("GIRP\x01", 5, b.begin());
    }
    try {
      decode(b);
    } catch (const Error& e) {
      auto c = e.code();
      EXPECT_TRUE(c == ErrorCode::BadMagic || c == ErrorCode::BadVersion ||
                  c == ErrorCode::UnknownMsgType || c == ErrorCode::Truncated ||
                  c == ErrorCode::TrailingBytes || c == ErrorCode::Oversize ||
                  c == ErrorCode::MalformedPayload)
          << e.what();
    }
  }
}

TEST(WireMessages, EveryRequestHasOneResponse) {
  EXPECT_EQ(response_type(MsgType::Ping), MsgType::Pong);
  EXPECT_EQ(response_type(MsgType::ReadBuffer), MsgType::BufferData);
  EXPECT_EQ(response_type(MsgType::ImportSession), MsgType::Ack);
  EXPECT_GIRP_ERROR(response_type(MsgType::Pong), ErrorCode::InvalidArgument);
  int requests = 0;
  for (std::uint8_t t = girp::testing::kFirstMsgType; t <= girp::testing::kLastMsgType; ++t) {
    requests += is_request(static_cast<MsgType>(t));
  }
  EXPECT_EQ(requests, 10);
}

TEST(Transport, PipeCarriesFramesAndSurvivesPartialReads) {
  auto [a, b] = make_pipe();
  ByteStream* raw_a = a.get();
  FrameChannel rx(std::move(b));

  Bytes frame = encode(WriteBuffer{1, 2, Bytes(1000, 7)}, {}, 42);
  raw_a->write_all(ByteSpan(frame).first(20));
  EXPECT_GIRP_ERROR(rx.receive(Millis(20)), ErrorCode::Timeout);
  raw_a->write_all(ByteSpan(frame).subspan(20, 500));
  EXPECT_GIRP_ERROR(rx.receive(Millis(20)), ErrorCode::Timeout);
  raw_a->write_all(ByteSpan(frame).subspan(520));
  Frame f = rx.receive(Millis(100));
  EXPECT_EQ(f.header.request_id, 42u);
  EXPECT_EQ(std::get<WriteBuffer>(f.message).data.size(), 1000u);

  raw_a->close();
  EXPECT_GIRP_ERROR(rx.receive(Millis(100)), ErrorCode::ConnectionClosed);
}

TEST(Transport, ConfiguredPayloadCapAppliesBothWays) {
  auto [a, b] = make_pipe();
  FrameChannel tx(std::move(a)), rx(std::move(b));
  tx.set_max_payload(100);
  rx.set_max_payload(100);
  EXPECT_GIRP_ERROR(tx.send(WriteBuffer{1, 0, Bytes(100)}, {}, 1), ErrorCode::Oversize);
  tx.send(WriteBuffer{1, 0, Bytes(80)}, {}, 2);
  EXPECT_EQ(rx.receive(Millis(100)).header.request_id, 2u);
  tx.send_raw(encode(WriteBuffer{1, 0, Bytes(200)}, {}, 3));
  EXPECT_GIRP_ERROR(rx.receive(Millis(100)), ErrorCode::Oversize);
  EXPECT_GIRP_ERROR(tx.set_max_payload(0), ErrorCode::ConfigError);
  EXPECT_GIRP_ERROR(tx.set_max_payload(kMaxPayload + 1), ErrorCode::ConfigError);
}

TEST(Transport, TcpLoopback) {
  TcpListener listener(Endpoint{"127.0.0.1", 0});
  ASSERT_NE(listener.port(), 0);
  std::thread server([&] {
    auto s = listener.accept(Millis(2000));
    ASSERT_NE(s, nullptr);
    FrameChannel ch(std::move(s));
    Frame f = ch.receive(Millis(2000));
    ch.send(Pong{std::get<Ping>(f.message).echo_token}, f.header.session, f.header.request_id);
  });
  FrameChannel client(connect_tcp(Endpoint{"127.0.0.1", listener.port()}));
  std::uint64_t rtt = measure_rtt(client, {});
  EXPECT_GT(rtt, 0u);
  server.join();
}

TEST(Transport, ConnectRefused) {
  std::uint16_t port;
  {
    TcpListener l(Endpoint{"127.0.0.1", 0});
    port = l.port();
  }
  EXPECT_GIRP_ERROR(connect_tcp(Endpoint{"127.0.0.1", port}), ErrorCode::IoError);
}

TEST(Endpoint, Parse) {
  auto e = parse_endpoint("10.0.0.2:9000");
  EXPECT_EQ(e.host, "10.0.0.2");
  EXPECT_EQ(e.port, 9000);
  EXPECT_EQ(parse_endpoint(":1234").host, "127.0.0.1");
  EXPECT_EQ(parse_endpoint("example").port, kDefaultPort);
  EXPECT_GIRP_ERROR(parse_endpoint("host:99999"), ErrorCode::ConfigError);
  EXPECT_GIRP_ERROR(parse_endpoint("host:x"), ErrorCode::ConfigError);
}

// Answers PINGs; optionally sends a decoy PONG with the wrong token first.
void echo_once(FrameChannel& ch, bool decoy) {
  Frame f = ch.receive(Millis(1000));
  auto token = std::get<Ping>(f.message).echo_token;
  if (decoy) ch.send(Pong{token + 1}, f.header.session, f.header.request_id);
  ch.send(Pong{token}, f.header.session, f.header.request_id);
}

TEST(MeasureRtt, LoopbackPipe) {
  auto [a, b] = make_pipe();
  FrameChannel client(std::move(a)), server(std::move(b));
  std::thread peer([&] { echo_once(server, false); });
  std::uint64_t rtt = measure_rtt(client, {});
  peer.join();
  EXPECT_GT(rtt, 0u);
  EXPECT_LT(rtt, 10'000'000u);
}

TEST(MeasureRtt, MismatchedTokenIsDiscarded) {
  auto [a, b] = make_pipe();
  FrameChannel client(std::move(a)), server(std::move(b));
  std::thread peer([&] { echo_once(server, true); });
  EXPECT_GT(measure_rtt(client, {}), 0u);
  peer.join();
  EXPECT_GIRP_ERROR(client.receive(Millis(10)), ErrorCode::Timeout);  // no stray frames left
}

TEST(MeasureRtt, SilentPeerTimesOut) {
  auto [a, b] = make_pipe();
  FrameChannel client(std::move(a));
  auto start = std::chrono::steady_clock::now();
  EXPECT_GIRP_ERROR(measure_rtt(client, {}, Millis(50)), ErrorCode::Timeout);
  EXPECT_GE(std::chrono::steady_clock::now() - start, Millis(50));
}

}  // namespace
}  // namespace girp::wire
