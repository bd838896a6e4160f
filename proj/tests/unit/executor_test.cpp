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

#include "girp/executor/executor.hpp"
#include "girp/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/test_util.hpp"

namespace girp::exec {
namespace {

using fixtures::Kernel;
using girp::testing::as_u32;
using girp::testing::u32_buffer;
using spirv::DescriptorSlot;

constexpr std::uint32_t kN = fixtures::kMultiplyElements;

struct MultiplyBuffers {
  Bytes a, v;
  MultiplyBuffers(std::size_t n = kN) {
    std::vector<std::uint32_t> av(n);
    for (std::size_t i = 0; i < n; ++i) av[i] = static_cast<std::uint32_t>(i);
    a = u32_buffer(av);
    v = u32_buffer(std::vector<std::uint32_t>(n, 3));
  }
  BufferMap map() {
    return {{DescriptorSlot{0, 0}, std::span<std::uint8_t>(a)},
            {DescriptorSlot{0, 1}, std::span<std::uint8_t>(v)}};
  }
};

TEST(Executor, LoadIsIdempotent) {
  InterpreterExecutor ex;
  auto m = fixtures::module(Kernel::Multiply);
  Digest h1 = ex.load(m);
  EXPECT_EQ(h1, sha256(fixtures::bytes(Kernel::Multiply)));
  Digest h2 = ex.load(spirv::SpirvModule::from_bytes(fixtures::bytes(Kernel::Multiply)));
  EXPECT_EQ(h1, h2);
  EXPECT_EQ(ex.resident_modules(), 1u);
  ex.load(fixtures::module(Kernel::Fill));
  EXPECT_EQ(ex.resident_modules(), 2u);
}

TEST(Executor, RejectsModulesOutsideInterpreterSubset) {
  InterpreterExecutor ex;
  try {
    ex.load(fixtures::module(Kernel::Branch));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BackendReject);
    EXPECT_NE(e.detail().find("250"), std::string::npos) << e.detail();
  }
  EXPECT_EQ(ex.resident_modules(), 0u);
}

TEST(Executor, CorruptedMagic) {
  InterpreterExecutor ex;
  Bytes b = fixtures::bytes(Kernel::Multiply);
  b[0] ^= 0xff;
  EXPECT_GIRP_ERROR(ex.load(spirv::SpirvModule::from_bytes(b)), ErrorCode::BadMagic);
}

TEST(Executor, CreatePipeline) {
  InterpreterExecutor ex;
  Digest h = ex.load(fixtures::module(Kernel::Multiply));
  auto p = ex.create_pipeline(h, "main");
  EXPECT_EQ(p.local_size, (spirv::LocalSize{64, 1, 1}));
  EXPECT_EQ(p.module_hash, h);
  EXPECT_EQ(p.entry, "main");
  EXPECT_NE(ex.create_pipeline(h, "main").id, p.id);

  EXPECT_GIRP_ERROR(ex.create_pipeline(sha256(Bytes{1, 2, 3}), "main"), ErrorCode::UnknownModule);
  EXPECT_GIRP_ERROR(ex.create_pipeline(h, "absent"), ErrorCode::EntryNotFound);
}

TEST(Executor, DispatchProducesOracleOutputAndTimings) {
  InterpreterExecutor ex;
  auto p = ex.create_pipeline(ex.load(fixtures::module(Kernel::Multiply)), "main");
  MultiplyBuffers bufs;
  auto t = ex.dispatch(p, {1024, 1, 1}, bufs.map());
  for (std::uint32_t i = 0; i < kN; ++i) ASSERT_EQ(as_u32(bufs.v)[i], 3u * i);
  EXPECT_GT(t.prepare_ns, 0u);
  EXPECT_GT(t.execute_ns, 0u);
  EXPECT_GT(t.readback_ns, 0u);
  EXPECT_EQ(t.total_ns(), t.prepare_ns + t.execute_ns + t.readback_ns);
}

TEST(Executor, EmptyDispatch) {
  InterpreterExecutor ex;
  auto p = ex.create_pipeline(ex.load(fixtures::module(Kernel::Multiply)), "main");
  MultiplyBuffers bufs;
  Bytes before = bufs.v;
  ex.dispatch(p, {0, 1, 1}, bufs.map());
  EXPECT_EQ(bufs.v, before);
}

TEST(Executor, MissingBinding) {
  InterpreterExecutor ex;
  auto p = ex.create_pipeline(ex.load(fixtures::module(Kernel::Multiply)), "main");
  MultiplyBuffers bufs;
  BufferMap only_a = {{DescriptorSlot{0, 0}, std::span<std::uint8_t>(bufs.a)}};
  try {
    ex.dispatch(p, {1, 1, 1}, only_a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingBinding);
    EXPECT_EQ(e.detail(), "set 0 binding 1");
  }
}

TEST(Executor, UnknownPipeline) {
  InterpreterExecutor ex;
  MultiplyBuffers bufs(64);
  EXPECT_GIRP_ERROR(ex.dispatch(PipelineHandle{42, {}, "main", {}}, {1, 1, 1}, bufs.map()),
                    ErrorCode::UnknownPipeline);
}

TEST(Executor, FailedDispatchLeavesBuffersUntouched) {
  InterpreterExecutor ex;
  auto p = ex.create_pipeline(ex.load(fixtures::module(Kernel::Multiply)), "main");
  MultiplyBuffers bufs;
  bufs.v.resize(bufs.v.size() / 2);
  Bytes before = bufs.v;
  EXPECT_GIRP_ERROR(ex.dispatch(p, {1024, 1, 1}, bufs.map()), ErrorCode::OutOfBoundsAccess);
  EXPECT_EQ(bufs.v, before);
}

TEST(Executor, ParallelModeMatchesSerial) {
  InterpreterExecutor serial, parallel(ExecutorOptions{.parallel = true});
  MultiplyBuffers b1, b2;
  serial.dispatch(serial.create_pipeline(serial.load(fixtures::module(Kernel::Multiply)), "main"),
                  {1024, 1, 1}, b1.map());
  parallel.dispatch(
      parallel.create_pipeline(parallel.load(fixtures::module(Kernel::Multiply)), "main"),
      {1024, 1, 1}, b2.map());
  EXPECT_EQ(b1.v, b2.v);
}

TEST(Executor, CapabilitiesAreConstant) {
  ExecutorOptions opts;
  opts.limits.max_invocations = 4096;
  InterpreterExecutor ex(opts);
  auto c = ex.capabilities();
  EXPECT_EQ(c.name, "reference-interp");
  EXPECT_FALSE(c.full_spirv);
  EXPECT_EQ(c.max_invocations, 4096u);
  ex.load(fixtures::module(Kernel::Multiply));
  EXPECT_EQ(ex.capabilities(), c);
  EXPECT_EQ(c.describe(),
            "name=reference-interp;spirv=subset;max_buffer_bytes=268435456;max_invocations=4096");
}

TEST(Executor, BackendSelection) {
  EXPECT_EQ(parse_backend("interp"), Backend::Interp);
  EXPECT_EQ(parse_backend("gpu"), Backend::Gpu);
  EXPECT_GIRP_ERROR(parse_backend("cuda"), ErrorCode::ConfigError);
  EXPECT_NE(make_executor(Backend::Interp), nullptr);
  EXPECT_GIRP_ERROR(make_executor(Backend::Gpu), ErrorCode::BackendUnavailable);
}

}  // namespace
}  // namespace girp::exec
