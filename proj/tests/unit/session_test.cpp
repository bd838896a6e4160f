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

#include <atomic>
#include <functional>
#include <thread>

#include "girp/fixtures.hpp"
#include "girp/session/server.hpp"
#include "girp/session/session.hpp"
#include "girp/session/snapshot.hpp"
#include "support/scripts.hpp"
#include "support/test_util.hpp"

namespace girp::session {
namespace {

using fixtures::Kernel;
using girp::testing::as_u32;
using girp::testing::load_request;
using girp::testing::u32_buffer;
using namespace girp::wire;

SessionId make_id(std::uint8_t seed) {
  SessionId id{};
  for (auto& b : id) b = seed++;
  return id;
}

std::unique_ptr<Session> fresh(std::uint8_t seed = 1) {
  return std::make_unique<Session>(make_id(seed), SessionConfig{});
}

template <typename T>
T expect_ok(const Message& m) {
  if (const auto* err = std::get_if<ErrorMsg>(&m)) {
    ADD_FAILURE() << "ERROR " << error_name(static_cast<ErrorCode>(err->code)) << ": " << err->message;
    return T{};
  }
  return std::get<T>(m);
}

ErrorCode expect_error(const Message& m) {
  const auto* err = std::get_if<ErrorMsg>(&m);
  if (err == nullptr) {
    ADD_FAILURE() << "expected ERROR, got " << msg_type_name(type_of(m));
    return ErrorCode{};
  }
  return static_cast<ErrorCode>(err->code);
}

// Loads multiply, allocates a=(0..n) and v=(3,...) and creates the pipeline.
std::uint64_t setup_multiply(Session& s, std::uint32_t n = fixtures::kMultiplyElements) {
  auto load = load_request(Kernel::Multiply);
  expect_ok<ModuleAck>(s.handle(load));
  auto pipeline = expect_ok<PipelineAck>(s.handle(CreatePipeline{load.hash, "main"})).pipeline_id;
  std::vector<std::uint32_t> a(n), v(n, 3);
  for (std::uint32_t i = 0; i < n; ++i) a[i] = i;
  expect_ok<Ack>(s.handle(AllocBuffer{1, 4ull * n}));
  expect_ok<Ack>(s.handle(AllocBuffer{2, 4ull * n}));
  expect_ok<Ack>(s.handle(WriteBuffer{1, 0, u32_buffer(a)}));
  expect_ok<Ack>(s.handle(WriteBuffer{2, 0, u32_buffer(v)}));
  return pipeline;
}

Message multiply_dispatch(std::uint64_t pipeline, std::uint32_t groups) {
  return Dispatch{pipeline, groups, 1, 1, {{0, 0, 1}, {0, 1, 2}}};
}

TEST(Snapshot, GoldenBytes) {
  Snapshot s;
  s.session_id = make_id(0x10);
  s.epoch = 3;
  Bytes a = {'m', 'o', 'd', 'u', 'l', 'e', '-', 'a'};
  Bytes b = {'m', 'o', 'd', 'u', 'l', 'e', '-', 'b'};
  s.modules = {{sha256(b), b}, {sha256(a), a}};  // out of order on purpose
  s.pipelines = {{1, sha256(a), "main"}};
  s.buffers = {{9, {}}, {1, {1, 2, 3, 4}}};
  Bytes golden = girp::testing::read_file(GIRP_GOLDEN_DIR "/snapshot_v1.bin");
  ASSERT_FALSE(golden.empty());
  EXPECT_EQ(to_hex(serialize(s)), to_hex(golden));

  Snapshot parsed = parse_snapshot(golden);
  EXPECT_EQ(parsed.epoch, 3u);
  EXPECT_EQ(parsed.session_id, make_id(0x10));
  EXPECT_EQ(parsed.pipelines, s.pipelines);
  ASSERT_EQ(parsed.buffers.size(), 2u);
  EXPECT_EQ(parsed.buffers[0].id, 1u);
  EXPECT_EQ(serialize(parsed), golden);
}

TEST(Snapshot, EveryTamperedByteIsRejected) {
  auto s = fresh();
  setup_multiply(*s, 64);
  Bytes snap = s->export_snapshot();
  for (std::size_t i = 0; i < snap.size(); ++i) {
    Bytes t = snap;
    t[i] ^= static_cast<std::uint8_t>(1 + i % 255);
    EXPECT_GIRP_ERROR(parse_snapshot(t), ErrorCode::DigestMismatch);
  }
  EXPECT_GIRP_ERROR(parse_snapshot(ByteSpan(snap).first(31)), ErrorCode::Truncated);
}

// Rewrites the body and recomputes the digest so checks behind it are reached.
Bytes reseal(Bytes snap, const std::function<void(Bytes&)>& edit) {
  snap.resize(snap.size() - 32);
  edit(snap);
  Digest d = sha256(snap);
  snap.insert(snap.end(), d.bytes.begin(), d.bytes.end());
  return snap;
}

TEST(Snapshot, FormatVersionTwoIsUnsupported) {
  Bytes snap = fresh()->export_snapshot();
  Bytes v2 = reseal(snap, [](Bytes& b) { b[0] = 2; });
  EXPECT_GIRP_ERROR(parse_snapshot(v2), ErrorCode::FormatVersionUnsupported);
}

TEST(Snapshot, StructuralChecksBehindTheDigest) {
  Snapshot s;
  Bytes m = {1, 2, 3};
  s.modules = {{sha256(m), m}};
  s.pipelines = {{1, sha256(Bytes{9}), "main"}};
  EXPECT_GIRP_ERROR(parse_snapshot(serialize(s)), ErrorCode::MalformedPayload);

  s.pipelines.clear();
  s.modules[0].hash = sha256(Bytes{4});
  EXPECT_GIRP_ERROR(parse_snapshot(serialize(s)), ErrorCode::HashMismatch);

  // Buffers written out of order by hand.
  Snapshot ordered;
  ordered.buffers = {{1, {7}}, {2, {8}}};
  Bytes bytes = serialize(ordered);
  Bytes swapped = reseal(bytes, [](Bytes& b) {
    // Body tail: [id 1][size 1][7][id 2][size 1][8]
    std::size_t tail = b.size() - 34;
    b[tail] = 2;
    b[tail + 17] = 1;
  });
  EXPECT_GIRP_ERROR(parse_snapshot(swapped), ErrorCode::MalformedPayload);

  Bytes extra = reseal(bytes, [](Bytes& b) { b.push_back(0); });
  EXPECT_GIRP_ERROR(parse_snapshot(extra), ErrorCode::TrailingBytes);
}

TEST(Session, LoadModuleIsIdempotent) {
  auto s = fresh();
  auto load = load_request(Kernel::Multiply);
  EXPECT_FALSE(expect_ok<ModuleAck>(s->handle(load)).already_cached);
  EXPECT_TRUE(expect_ok<ModuleAck>(s->handle(load)).already_cached);
  EXPECT_EQ(s->module_count(), 1u);
}

TEST(Session, LoadModuleErrors) {
  auto s = fresh();
  auto load = load_request(Kernel::Multiply);
  load.hash.bytes[0] ^= 1;
  EXPECT_EQ(expect_error(s->handle(load)), ErrorCode::HashMismatch);
  EXPECT_EQ(expect_error(s->handle(load_request(Kernel::Branch))), ErrorCode::BackendReject);
  Bytes junk(24, 1);
  EXPECT_EQ(expect_error(s->handle(LoadModule{sha256(junk), junk})), ErrorCode::BadMagic);
  EXPECT_EQ(s->module_count(), 0u);
}

TEST(Session, FullScriptMatchesOracle) {
  auto s = fresh();
  auto pipeline = setup_multiply(*s);
  auto ack = expect_ok<DispatchAck>(s->handle(multiply_dispatch(pipeline, 1024)));
  EXPECT_GT(ack.execute_ns, 0u);
  auto data = expect_ok<BufferData>(s->handle(ReadBuffer{2, 0, 4 * fixtures::kMultiplyElements}));
  auto out = as_u32(data.data);
  for (std::uint32_t i = 0; i < fixtures::kMultiplyElements; ++i) ASSERT_EQ(out[i], 3 * i);
}

TEST(Session, RequestErrors) {
  auto s = fresh();
  auto pipeline = setup_multiply(*s, 64);
  Bytes before = *s->buffer(2);

  EXPECT_EQ(expect_error(s->handle(ReadBuffer{2, 200, 100})), ErrorCode::OutOfRange);
  EXPECT_EQ(expect_error(s->handle(ReadBuffer{2, ~0ull, 2})), ErrorCode::OutOfRange);
  EXPECT_EQ(expect_error(s->handle(ReadBuffer{7, 0, 1})), ErrorCode::UnknownBuffer);
  EXPECT_EQ(expect_error(s->handle(WriteBuffer{2, 255, {1, 2}})), ErrorCode::OutOfRange);
  EXPECT_EQ(expect_error(s->handle(AllocBuffer{2, 8})), ErrorCode::BufferExists);
  EXPECT_EQ(expect_error(s->handle(AllocBuffer{3, 1ull << 40})), ErrorCode::ResourceLimit);
  EXPECT_EQ(expect_error(s->handle(CreatePipeline{sha256(Bytes{}), "main"})), ErrorCode::UnknownModule);
  EXPECT_EQ(expect_error(s->handle(CreatePipeline{load_request(Kernel::Multiply).hash, "nope"})),
            ErrorCode::EntryNotFound);
  EXPECT_EQ(expect_error(s->handle(multiply_dispatch(99, 1))), ErrorCode::UnknownPipeline);
  EXPECT_EQ(expect_error(s->handle(Dispatch{pipeline, 1, 1, 1, {{0, 0, 1}}})), ErrorCode::MissingBinding);
  EXPECT_EQ(expect_error(s->handle(Dispatch{pipeline, 1, 1, 1, {{0, 0, 1}, {0, 1, 5}}})),
            ErrorCode::UnknownBuffer);
  EXPECT_EQ(expect_error(s->handle(Dispatch{pipeline, 1, 1, 1, {{0, 0, 1}, {0, 0, 2}}})),
            ErrorCode::MalformedPayload);
  EXPECT_EQ(expect_error(s->handle(multiply_dispatch(pipeline, 2))), ErrorCode::OutOfBoundsAccess);
  EXPECT_EQ(expect_error(s->handle(Pong{1})), ErrorCode::UnexpectedMessage);

  EXPECT_EQ(*s->buffer(2), before);
  EXPECT_EQ(s->buffer_count(), 2u);
  EXPECT_EQ(s->pipeline_count(), 1u);
}

TEST(Session, ZeroGroupDispatchChangesNothing) {
  auto s = fresh();
  auto pipeline = setup_multiply(*s, 64);
  Bytes before = s->export_snapshot();
  expect_ok<DispatchAck>(s->handle(multiply_dispatch(pipeline, 0)));
  EXPECT_EQ(s->export_snapshot(), before);
}

TEST(Session, ErrorResponsesLeaveStateUnchanged) {
  std::mt19937_64 rng(17);
  int failures = 0;
  for (int trial = 0; trial < 20; ++trial) {
    auto s = fresh();
    for (const auto& req : girp::testing::random_script(rng, 60)) {
      Bytes before = s->export_snapshot();
      if (std::holds_alternative<ErrorMsg>(s->handle(req))) {
        ++failures;
        ASSERT_EQ(s->export_snapshot(), before) << msg_type_name(type_of(req));
      }
    }
  }
  EXPECT_GT(failures, 50);
}

TEST(Session, ExportIsDeterministicAndMatchesReads) {
  auto s = fresh();
  EXPECT_TRUE(parse_snapshot(s->export_snapshot()).modules.empty());
  auto pipeline = setup_multiply(*s, 256);
  expect_ok<DispatchAck>(s->handle(multiply_dispatch(pipeline, 4)));
  Bytes a = s->export_snapshot();
  EXPECT_EQ(a, s->export_snapshot());
  EXPECT_GT(s->last_export_ns(), 0u);

  auto snap = parse_snapshot(a);
  auto live = expect_ok<BufferData>(s->handle(ReadBuffer{2, 0, 1024}));
  ASSERT_EQ(snap.buffers.size(), 2u);
  EXPECT_EQ(snap.buffers[1].bytes, live.data);
  EXPECT_EQ(snap.pipelines.size(), 1u);
  EXPECT_EQ(s->module_count(), 1u) << "export leaves the source live";
}

TEST(Session, ImportReproducesSourceState) {
  auto a = fresh(1);
  auto pipeline = setup_multiply(*a, 256);
  Bytes snap = a->export_snapshot();

  auto b = Session::import_snapshot(snap, SessionConfig{});
  EXPECT_EQ(b->id(), a->id());
  EXPECT_EQ(b->epoch(), a->epoch() + 1);
  EXPECT_GT(b->last_import_ns(), 0u);
  EXPECT_EQ(*b->buffer(1), *a->buffer(1));
  EXPECT_EQ(*b->buffer(2), *a->buffer(2));

  // Same pipeline id, same result, on both sides.
  expect_ok<DispatchAck>(a->handle(multiply_dispatch(pipeline, 4)));
  expect_ok<DispatchAck>(b->handle(multiply_dispatch(pipeline, 4)));
  EXPECT_EQ(*b->buffer(2), *a->buffer(2));

  // New pipelines on the importer continue the id sequence.
  auto next = expect_ok<PipelineAck>(
      b->handle(CreatePipeline{load_request(Kernel::Multiply).hash, "main"}));
  EXPECT_EQ(next.pipeline_id, pipeline + 1);

  auto c = Session::import_snapshot(b->export_snapshot(), SessionConfig{}, make_id(99));
  EXPECT_EQ(c->id(), make_id(99));
  EXPECT_EQ(c->epoch(), 2u);
}

TEST(Session, ImportRejectsModulesTheBackendCannotHost) {
  Snapshot s;
  Bytes branch = fixtures::bytes(Kernel::Branch);
  s.modules = {{sha256(branch), branch}};
  EXPECT_GIRP_ERROR(Session::import_snapshot(serialize(s), SessionConfig{}), ErrorCode::BackendReject);
}

TEST(Session, ExportWhileRequestInFlightIsBusy) {
  auto s = fresh();
  auto pipeline = setup_multiply(*s);
  // The largest dispatch the default limits allow keeps the session busy long
  // enough to observe.
  expect_ok<Ack>(s->handle(AllocBuffer{3, 4u << 20}));
  expect_ok<Ack>(s->handle(AllocBuffer{4, 4u << 20}));
  std::atomic<bool> done{false};
  std::thread worker([&] {
    for (int i = 0; i < 3; ++i) {
      s->handle(Dispatch{pipeline, 16384, 1, 1, {{0, 0, 3}, {0, 1, 4}}});
    }
    done = true;
  });
  bool saw_busy = false;
  while (!done && !saw_busy) {
    auto reply = s->handle(ExportSession{});
    if (const auto* e = std::get_if<ErrorMsg>(&reply)) {
      saw_busy = e->code == static_cast<std::uint16_t>(ErrorCode::Busy);
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(1));
  }
  worker.join();
  EXPECT_TRUE(saw_busy);
  EXPECT_NO_THROW(s->export_snapshot());
}

// Responses compared without the timing fields, which legitimately differ.
std::string normalize(const Message& m) {
  if (std::holds_alternative<DispatchAck>(m)) return "DISPATCH_ACK";
  if (const auto* e = std::get_if<ErrorMsg>(&m)) return "ERROR " + std::to_string(e->code);
  return to_hex(encode(m, {}, 0));
}

TEST(Migration, SplitScriptsMatchUnsplitRuns) {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    auto script = girp::testing::random_script(rng, 40);
    std::size_t k = rng() % (script.size() + 1);

    auto whole = fresh(7);
    std::vector<std::string> expected;
    for (const auto& r : script) expected.push_back(normalize(whole->handle(r)));

    auto a = fresh(7);
    std::vector<std::string> got;
    for (std::size_t i = 0; i < k; ++i) got.push_back(normalize(a->handle(script[i])));
    auto b = Session::import_snapshot(a->export_snapshot(), SessionConfig{});
    for (std::size_t i = k; i < script.size(); ++i) got.push_back(normalize(b->handle(script[i])));

    ASSERT_EQ(got, expected) << "trial " << trial << " split " << k;
    Bytes sw = whole->export_snapshot(), sb = b->export_snapshot();
    // Epochs differ by the one import; everything else is identical.
    auto pw = parse_snapshot(sw), pb = parse_snapshot(sb);
    EXPECT_EQ(pb.epoch, pw.epoch + 1);
    pb.epoch = pw.epoch;
    ASSERT_EQ(pb, pw) << "trial " << trial << " split " << k;
  }
}

// Minimal request/response helper over a raw channel.
Frame call(FrameChannel& ch, const Message& m, const SessionId& session, std::uint64_t rid) {
  ch.send(m, session, rid);
  Frame f = ch.receive(Millis(5000));
  EXPECT_EQ(f.header.request_id, rid);
  return f;
}

TEST(Server, SessionsOverInProcessPipes) {
  Server server(ServerOptions{});
  auto [client_end, server_end] = make_pipe();
  server.serve(std::move(server_end));
  FrameChannel ch(std::move(client_end));

  auto hello = std::get<HelloAck>(call(ch, Hello{ClientKind::Ue, 0x10000, 0x10600, "interp"}, {}, 1).message);
  EXPECT_NE(hello.session, SessionId{});
  EXPECT_EQ(hello.capabilities.rfind("name=reference-interp", 0), 0u);
  EXPECT_EQ(server.session_count(), 1u);

  auto load = load_request(Kernel::Fill);
  EXPECT_FALSE(std::get<ModuleAck>(call(ch, load, hello.session, 2).message).already_cached);

  // Requests naming an unknown session are refused but the connection lives.
  auto err = std::get<ErrorMsg>(call(ch, load, make_id(50), 3).message);
  EXPECT_EQ(err.code, static_cast<std::uint16_t>(ErrorCode::UnknownSession));

  // Unknown message types get an ERROR naming the byte.
  Bytes weird = encode(Ping{1}, hello.session, 4);
  weird[5] = 0x7e;
  ch.send_raw(weird);
  err = std::get<ErrorMsg>(ch.receive(Millis(5000)).message);
  EXPECT_EQ(err.code, static_cast<std::uint16_t>(ErrorCode::UnknownMsgType));
  EXPECT_EQ(err.message, "0x7e");

  // HELLO with a known id resumes it.
  auto resumed = std::get<HelloAck>(call(ch, Hello{}, hello.session, 5).message);
  EXPECT_EQ(resumed.session, hello.session);
  EXPECT_EQ(server.session_count(), 1u);
  EXPECT_EQ(std::get<Pong>(call(ch, Ping{77}, {}, 6).message).echo_token, 77u);

  // Export, then import under a new id.
  auto snap = std::get<SessionSnapshot>(call(ch, ExportSession{}, hello.session, 7).message);
  auto ack = std::get<Ack>(call(ch, ImportSession{snap.snapshot}, make_id(60), 8).message);
  EXPECT_EQ(ack.value, 1u);
  EXPECT_EQ(server.session_count(), 2u);
  EXPECT_EQ(server.find(make_id(60))->module_count(), 1u);

  Bytes tampered = snap.snapshot;
  tampered[20] ^= 1;
  err = std::get<ErrorMsg>(call(ch, ImportSession{tampered}, make_id(61), 9).message);
  EXPECT_EQ(err.code, static_cast<std::uint16_t>(ErrorCode::DigestMismatch));

  EXPECT_EQ(std::get<ErrorMsg>(call(ch, Hello{}, make_id(70), 10).message).code,
            static_cast<std::uint16_t>(ErrorCode::UnknownSession));
  server.stop();
}

TEST(Server, BadMagicDropsTheConnection) {
  Server server(ServerOptions{});
  auto [client_end, server_end] = make_pipe();
  server.serve(std::move(server_end));
  FrameChannel ch(std::move(client_end));
  Bytes junk = encode(Ping{1}, {}, 1);
  junk[0] = 'X';
  ch.send_raw(junk);
  auto err = std::get<ErrorMsg>(ch.receive(Millis(5000)).message);
  EXPECT_EQ(err.code, static_cast<std::uint16_t>(ErrorCode::BadMagic));
  EXPECT_GIRP_ERROR(ch.receive(Millis(5000)), ErrorCode::ConnectionClosed);
}

TEST(Server, TcpLoopbackAndStop) {
  Server server(ServerOptions{Endpoint{"127.0.0.1", 0}, {}});
  server.start();
  FrameChannel ch(connect_tcp(Endpoint{"127.0.0.1", server.port()}));
  auto hello = std::get<HelloAck>(call(ch, Hello{}, {}, 1).message);
  EXPECT_EQ(server.find(hello.session)->id(), hello.session);
  server.stop();
  EXPECT_GIRP_ERROR(ch.receive(Millis(2000)), ErrorCode::ConnectionClosed);
}

}  // namespace
}  // namespace girp::session
