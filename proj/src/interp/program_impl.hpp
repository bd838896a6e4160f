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

#ifndef GIRP_SRC_INTERP_PROGRAM_IMPL_HPP
#define GIRP_SRC_INTERP_PROGRAM_IMPL_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "girp/interp/interpreter.hpp"

namespace girp::interp {

using Lanes = std::array<std::uint32_t, 4>;

enum class OpKind : std::uint8_t {
  Load,
  Store,
  AccessChain,
  IAdd,
  ISub,
  IMul,
  UDiv,
  SDiv,
  FAdd,
  FSub,
  FMul,
  FDiv,
  Extract,
};

// One decoded instruction. Operands are slot indices into the value or
// pointer tables, never SPIR-V ids.
struct Inst {
  OpKind kind;
  std::uint8_t lanes = 1;  // component count; Extract: component index
  std::uint32_t dst = 0;
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t term_begin = 0;
  std::uint32_t term_count = 0;
  std::int64_t static_offset = 0;
};

// Dynamic access-chain index: offset += sext(value[slot].x) * stride.
struct Term {
  std::uint32_t value_slot = 0;
  std::int64_t stride = 0;
};

struct Ptr {
  std::uint32_t region = 0;
  std::int64_t offset = 0;
};

enum class RegionKind : std::uint8_t { Buffer, Builtin, Private };

struct RegionDesc {
  RegionKind kind = RegionKind::Private;
  spirv::DescriptorSlot slot;         // Buffer
  std::uint32_t scratch_offset = 0;   // Builtin / Private
  std::uint32_t size = 0;             // Builtin / Private
  std::uint32_t builtin = 0;          // Builtin
  std::string name;
};

struct ProgramImpl {
  spirv::LocalSize local_size;
  std::vector<spirv::DescriptorSlot> declared_bindings;
  std::vector<Inst> code;
  std::vector<Term> terms;
  std::vector<Lanes> initial_values;
  std::vector<Ptr> initial_ptrs;
  std::vector<RegionDesc> regions;
  std::vector<std::uint8_t> scratch_init;
  std::uint64_t retired_per_invocation = 0;
};

}  // namespace girp::interp

#endif  // GIRP_SRC_INTERP_PROGRAM_IMPL_HPP
