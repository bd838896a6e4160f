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

#ifndef GIRP_FIXTURES_HPP
#define GIRP_FIXTURES_HPP

#include <cstddef>
#include <cstdint>

#include "girp/spirv/module.hpp"

// Compute kernels compiled from fixtures/kernels/*.comp with glslang and
// embedded in the library so the runtime and benches need no files.
namespace girp::fixtures {

enum class Kernel {
  Multiply,      // v[i] = a[i] * v[i]; binding 0 = a, binding 1 = v; local 64
  MultiplySb13,  // same kernel emitted as SPIR-V 1.3 (StorageBuffer class)
  Saxpy,         // y[i] = 2.5 * x[i] + y[i] in float; local 64
  Fill,          // dst[i] = params.value; binding 0 = params, 1 = dst
  Frame,         // pixels[y*width+x] = frame*2^24 + y*256 + x; local 8x8
  Branch,        // contains OpBranchConditional; outside the interpreter subset
};

std::span<const std::uint32_t> words(Kernel kernel);
spirv::SpirvModule module(Kernel kernel);
Bytes bytes(Kernel kernel);
const char* file_name(Kernel kernel);

inline constexpr std::uint32_t kMultiplyElements = 65536;
inline constexpr float kSaxpyAlpha = 2.5f;

namespace data {
extern const std::uint32_t k_multiply[];
extern const std::size_t k_multiply_words;
extern const std::uint32_t k_multiply_sb13[];
extern const std::size_t k_multiply_sb13_words;
extern const std::uint32_t k_saxpy[];
extern const std::size_t k_saxpy_words;
extern const std::uint32_t k_fill[];
extern const std::size_t k_fill_words;
extern const std::uint32_t k_frame[];
extern const std::size_t k_frame_words;
extern const std::uint32_t k_branch[];
extern const std::size_t k_branch_words;
}  // namespace data

}  // namespace girp::fixtures

#endif  // GIRP_FIXTURES_HPP
