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

#include "girp/fixtures.hpp"

#include <vector>

namespace girp::fixtures {

std::span<const std::uint32_t> words(Kernel kernel) {
  switch (kernel) {
    case Kernel::Multiply: return {data::k_multiply, data::k_multiply_words};
    case Kernel::MultiplySb13: return {data::k_multiply_sb13, data::k_multiply_sb13_words};
    case Kernel::Saxpy: return {data::k_saxpy, data::k_saxpy_words};
    case Kernel::Fill: return {data::k_fill, data::k_fill_words};
    case Kernel::Frame: return {data::k_frame, data::k_frame_words};
    case Kernel::Branch: return {data::k_branch, data::k_branch_words};
  }
  return {};
}

spirv::SpirvModule module(Kernel kernel) {
  auto w = words(kernel);
  return spirv::SpirvModule::from_words(std::vector<std::uint32_t>(w.begin(), w.end()));
}

Bytes bytes(Kernel kernel) { return module(kernel).bytes(); }

const char* file_name(Kernel kernel) {
  switch (kernel) {
    case Kernel::Multiply: return "multiply.spv";
    case Kernel::MultiplySb13: return "multiply_sb13.spv";
    case Kernel::Saxpy: return "saxpy.spv";
    case Kernel::Fill: return "fill.spv";
    case Kernel::Frame: return "frame.spv";
    case Kernel::Branch: return "branch.spv";
  }
  return "";
}

}  // namespace girp::fixtures
