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

#ifndef GIRP_SPIRV_MODULE_HPP
#define GIRP_SPIRV_MODULE_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "girp/bytes.hpp"
#include "girp/digest.hpp"

namespace girp::spirv {

struct Version {
  std::uint32_t major = 0;
  std::uint32_t minor = 0;

  auto operator<=>(const Version&) const = default;
};

struct Header {
  Version version;
  std::uint32_t generator = 0;
  std::uint32_t bound = 0;
};

// Validates the five-word header of a little-endian module.
// Errors: TooShort, Misaligned, BadMagic, BadSchema.
Header parse_header(ByteSpan bytes);

// A SPIR-V binary as transacted between client and server. Construction
// validates the header; the content hash is computed once.
class SpirvModule {
 public:
  static SpirvModule from_bytes(ByteSpan bytes);
  static SpirvModule from_words(std::vector<std::uint32_t> words);

  std::span<const std::uint32_t> words() const { return words_; }
  std::size_t byte_len() const { return words_.size() * 4; }
  const Digest& content_hash() const { return hash_; }
  Bytes bytes() const;

 private:
  SpirvModule(std::vector<std::uint32_t> words, Digest hash)
      : words_(std::move(words)), hash_(hash) {}

  std::vector<std::uint32_t> words_;
  Digest hash_;
};

/// SHA-256 of the exact bytes.
Digest hash_module(ByteSpan bytes);

enum class ExecutionModel { GLCompute, Vertex, Fragment, Other };

struct LocalSize {
  std::uint32_t x = 1;
  std::uint32_t y = 1;
  std::uint32_t z = 1;

  std::uint64_t count() const { return std::uint64_t{x} * y * z; }
  bool operator==(const LocalSize&) const = default;
};

struct EntryPoint {
  std::string name;
  ExecutionModel execution_model = ExecutionModel::Other;
  std::uint32_t model_code = 0;
  std::uint32_t function_id = 0;
  std::optional<LocalSize> local_size;  // present iff GLCompute

  bool operator==(const EntryPoint&) const = default;
};

// (set, binding) pair addressing a descriptor.
struct DescriptorSlot {
  std::uint32_t set = 0;
  std::uint32_t binding = 0;

  auto operator<=>(const DescriptorSlot&) const = default;
};

enum class BindingKind { StorageBuffer, Other };

struct BindingSlot {
  DescriptorSlot slot;
  std::uint32_t result_id = 0;
  BindingKind kind = BindingKind::Other;

  bool operator==(const BindingSlot&) const = default;
};

struct ModuleInfo {
  Version version;
  std::uint32_t bound = 0;
  std::vector<EntryPoint> entry_points;  // declaration order
  std::vector<BindingSlot> bindings;     // sorted by (set, binding)

  const EntryPoint* find_entry(std::string_view name) const;
  bool operator==(const ModuleInfo&) const = default;
};

// Walks the instruction stream and collects entry points, local sizes and
// descriptor bindings. Unknown opcodes are skipped by word count.
// Errors: ZeroWordCount, TruncatedInstruction, DuplicateEntryPointName,
// DuplicateBinding, MalformedModule.
ModuleInfo reflect(const SpirvModule& module);

/// Header check and reflection straight from bytes.
ModuleInfo reflect_bytes(ByteSpan bytes);

std::string_view execution_model_name(ExecutionModel model);

// Decodes a nul-terminated literal string starting at words[0]. Returns the
// number of words consumed, or nullopt when no terminator fits in `words`.
std::optional<std::size_t> decode_literal_string(std::span<const std::uint32_t> words,
                                                 std::string& out);

}  // namespace girp::spirv

#endif  // GIRP_SPIRV_MODULE_HPP
