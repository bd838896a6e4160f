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

#ifndef GIRP_INTERP_INTERPRETER_HPP
#define GIRP_INTERP_INTERPRETER_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "girp/spirv/module.hpp"

// Reference interpreter for a straight-line SPIR-V compute subset: 32-bit
// int/uint/float scalars and vectors, storage buffers, function-local
// variables and the compute builtins. Anything else is rejected up front.
namespace girp::interp {

struct InterpLimits {
  std::uint64_t max_invocations = 1'048'576;
  std::uint64_t max_instructions_per_invocation = 65'536;
};

struct Groups {
  std::uint32_t x = 1;
  std::uint32_t y = 1;
  std::uint32_t z = 1;

  std::uint64_t count() const { return std::uint64_t{x} * y * z; }
  bool operator==(const Groups&) const = default;
};

struct ExecStats {
  std::uint64_t invocations = 0;
  std::uint64_t instructions = 0;

  bool operator==(const ExecStats&) const = default;
};

// Buffers keyed by descriptor slot. The interpreter writes through the
// spans; the caller owns the storage.
using BufferMap = std::map<spirv::DescriptorSlot, std::span<std::uint8_t>>;

struct Violation {
  std::uint16_t opcode = 0;
  std::string detail;
};

struct ComplianceReport {
  std::vector<Violation> violations;

  bool compliant() const { return violations.empty(); }
  /// Distinct offending opcodes in order of first appearance.
  std::vector<std::uint16_t> opcodes() const;
  std::string summary() const;
};

/// Scans module-level declarations and the entry's body without executing.
/// Errors: EntryNotFound, MalformedModule (plus reflection errors).
ComplianceReport dry_run(const spirv::SpirvModule& module, std::string_view entry);

struct ProgramImpl;

// An entry point decoded into a flat instruction list with resolved operand
// slots and memory layout. Immutable after compile; safe to share across
// threads.
class Program {
 public:
  /// Errors: EntryNotFound, NotCompute, UnsupportedOpcode (first violation),
  /// MalformedModule, and reflection errors.
  static Program compile(const spirv::SpirvModule& module, std::string_view entry);

  spirv::LocalSize local_size() const;
  /// Every binding the module declares, sorted.
  std::span<const spirv::DescriptorSlot> declared_bindings() const;
  /// Instructions retired by one invocation.
  std::uint64_t instructions_per_invocation() const;

  const ProgramImpl& impl() const { return *impl_; }

 private:
  explicit Program(std::shared_ptr<const ProgramImpl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const ProgramImpl> impl_;
};

// Runs every invocation in a fixed order: workgroups with x fastest, then y,
// then z; inside a workgroup, local ids likewise. Buffer writes land in that
// order, so results are bit-reproducible.
// Errors: MissingBinding, LimitExceeded, OutOfBoundsAccess, DivideByZero.
ExecStats execute(const Program& program, Groups groups, const BufferMap& buffers,
                  const InterpLimits& limits = {});

// OpenMP variant: workgroups are distributed over threads in contiguous
// chunks. Matches execute() bit-for-bit for kernels whose invocations touch
// disjoint buffer ranges; on failure it reports the same first failing
// invocation, but buffers may hold writes from later workgroups.
ExecStats execute_parallel(const Program& program, Groups groups, const BufferMap& buffers,
                           const InterpLimits& limits = {});

/// compile + execute in one call.
ExecStats execute(const spirv::SpirvModule& module, std::string_view entry, Groups groups,
                  const BufferMap& buffers, const InterpLimits& limits = {});

}  // namespace girp::interp

#endif  // GIRP_INTERP_INTERPRETER_HPP
