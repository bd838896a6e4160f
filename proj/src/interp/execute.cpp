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

#include <omp.h>

#include <bit>
#include <climits>
#include <cstring>
#include <exception>
#include <limits>
#include <optional>

#include "girp/error.hpp"
#include "girp/spirv/opcodes.hpp"
#include "program_impl.hpp"

namespace girp::interp {
namespace {

static_assert(std::endian::native == std::endian::little,
              "buffer access assumes a little-endian host");

struct RuntimeRegion {
  std::uint8_t* base = nullptr;
  std::uint64_t size = 0;
};

struct InvocationIds {
  std::uint32_t global[3];
  std::uint32_t local[3];
  std::uint32_t group[3];
  std::uint32_t local_index;
};

float as_float(std::uint32_t bits) { return std::bit_cast<float>(bits); }
std::uint32_t as_bits(float f) { return std::bit_cast<std::uint32_t>(f); }

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) return std::numeric_limits<std::uint64_t>::max();
  return r;
}

// Per-thread execution state for one program over one buffer set.
class Machine {
 public:
  Machine(const ProgramImpl& p, const BufferMap& buffers, Groups groups)
      : p_(p),
        groups_(groups),
        values_(p.initial_values),
        ptrs_(p.initial_ptrs),
        scratch_(p.scratch_init),
        regions_(p.regions.size()) {
    for (std::size_t r = 0; r < p.regions.size(); ++r) {
      const auto& desc = p.regions[r];
      if (desc.kind == RegionKind::Buffer) {
        auto it = buffers.find(desc.slot);
        if (it == buffers.end()) {
          throw Error(ErrorCode::MissingBinding, "set " + std::to_string(desc.slot.set) +
                                                     " binding " +
                                                     std::to_string(desc.slot.binding));
        }
        regions_[r] = {it->second.data(), it->second.size()};
      } else {
        regions_[r] = {scratch_.data() + desc.scratch_offset, desc.size};
      }
    }
  }

  void run_workgroup(std::uint32_t gx, std::uint32_t gy, std::uint32_t gz) {
    const auto& ls = p_.local_size;
    InvocationIds ids{};
    ids.group[0] = gx;
    ids.group[1] = gy;
    ids.group[2] = gz;
    std::uint32_t index = 0;
    for (std::uint32_t lz = 0; lz < ls.z; ++lz) {
      for (std::uint32_t ly = 0; ly < ls.y; ++ly) {
        for (std::uint32_t lx = 0; lx < ls.x; ++lx) {
          ids.local[0] = lx;
          ids.local[1] = ly;
          ids.local[2] = lz;
          ids.global[0] = gx * ls.x + lx;
          ids.global[1] = gy * ls.y + ly;
          ids.global[2] = gz * ls.z + lz;
          ids.local_index = index++;
          run_invocation(ids);
        }
      }
    }
  }

 private:
  void run_invocation(const InvocationIds& ids) {
    ids_ = &ids;
    std::memcpy(scratch_.data(), p_.scratch_init.data(), scratch_.size());
    for (std::size_t r = 0; r < p_.regions.size(); ++r) {
      const auto& desc = p_.regions[r];
      if (desc.kind != RegionKind::Builtin) continue;
      std::uint8_t* dst = scratch_.data() + desc.scratch_offset;
      namespace bi = spirv::builtin;
      switch (desc.builtin) {
        case bi::GlobalInvocationId: std::memcpy(dst, ids.global, 12); break;
        case bi::LocalInvocationId: std::memcpy(dst, ids.local, 12); break;
        case bi::WorkgroupId: std::memcpy(dst, ids.group, 12); break;
        case bi::NumWorkgroups: {
          std::uint32_t n[3] = {groups_.x, groups_.y, groups_.z};
          std::memcpy(dst, n, 12);
          break;
        }
        case bi::LocalInvocationIndex: std::memcpy(dst, &ids.local_index, 4); break;
        default: break;
      }
    }

    for (const Inst& inst : p_.code) {
      switch (inst.kind) {
        case OpKind::Load: {
          const std::uint8_t* src = address(ptrs_[inst.a], 4u * inst.lanes);
          std::memcpy(values_[inst.dst].data(), src, 4u * inst.lanes);
          break;
        }
        case OpKind::Store: {
          std::uint8_t* dst = address(ptrs_[inst.a], 4u * inst.lanes);
          std::memcpy(dst, values_[inst.b].data(), 4u * inst.lanes);
          break;
        }
        case OpKind::AccessChain: {
          Ptr base = ptrs_[inst.a];
          std::int64_t off = base.offset;
          bool overflow = __builtin_add_overflow(off, inst.static_offset, &off);
          for (std::uint32_t t = 0; t < inst.term_count; ++t) {
            const Term& term = p_.terms[inst.term_begin + t];
            auto idx = static_cast<std::int32_t>(values_[term.value_slot][0]);
            std::int64_t step;
            overflow |= __builtin_mul_overflow(std::int64_t{idx}, term.stride, &step);
            overflow |= __builtin_add_overflow(off, step, &off);
          }
          ptrs_[inst.dst] = {base.region, overflow ? std::numeric_limits<std::int64_t>::min() : off};
          break;
        }
        case OpKind::IAdd: lanewise(inst, [](std::uint32_t a, std::uint32_t b) { return a + b; }); break;
        case OpKind::ISub: lanewise(inst, [](std::uint32_t a, std::uint32_t b) { return a - b; }); break;
        case OpKind::IMul: lanewise(inst, [](std::uint32_t a, std::uint32_t b) { return a * b; }); break;
        case OpKind::UDiv:
          lanewise(inst, [](std::uint32_t a, std::uint32_t b) {
            if (b == 0) throw Error(ErrorCode::DivideByZero, "OpUDiv");
            return a / b;
          });
          break;
        case OpKind::SDiv:
          lanewise(inst, [](std::uint32_t a, std::uint32_t b) {
            auto sa = static_cast<std::int32_t>(a);
            auto sb = static_cast<std::int32_t>(b);
            if (sb == 0) throw Error(ErrorCode::DivideByZero, "OpSDiv");
            if (sa == INT32_MIN && sb == -1) return a;
            return static_cast<std::uint32_t>(sa / sb);
          });
          break;
        case OpKind::FAdd:
          lanewise(inst, [](std::uint32_t a, std::uint32_t b) { return as_bits(as_float(a) + as_float(b)); });
          break;
        case OpKind::FSub:
          lanewise(inst, [](std::uint32_t a, std::uint32_t b) { return as_bits(as_float(a) - as_float(b)); });
          break;
        case OpKind::FMul:
          lanewise(inst, [](std::uint32_t a, std::uint32_t b) { return as_bits(as_float(a) * as_float(b)); });
          break;
        case OpKind::FDiv:
          lanewise(inst, [](std::uint32_t a, std::uint32_t b) { return as_bits(as_float(a) / as_float(b)); });
          break;
        case OpKind::Extract:
          values_[inst.dst][0] = values_[inst.a][inst.lanes];
          break;
      }
    }
  }

  template <typename F>
  void lanewise(const Inst& inst, F f) {
    const Lanes& a = values_[inst.a];
    const Lanes& b = values_[inst.b];
    Lanes& d = values_[inst.dst];
    for (std::uint8_t c = 0; c < inst.lanes; ++c) d[c] = f(a[c], b[c]);
  }

  std::uint8_t* address(const Ptr& ptr, std::uint32_t bytes) {
    const RuntimeRegion& r = regions_[ptr.region];
    if (ptr.offset < 0 || static_cast<std::uint64_t>(ptr.offset) + bytes > r.size) {
      throw Error(ErrorCode::OutOfBoundsAccess,
                  p_.regions[ptr.region].name + " offset " + std::to_string(ptr.offset) +
                      " size " + std::to_string(bytes) + " (buffer holds " +
                      std::to_string(r.size) + " bytes) at invocation (" +
                      std::to_string(ids_->global[0]) + "," + std::to_string(ids_->global[1]) +
                      "," + std::to_string(ids_->global[2]) + ")");
    }
    return r.base + ptr.offset;
  }

  const ProgramImpl& p_;
  Groups groups_;
  std::vector<Lanes> values_;
  std::vector<Ptr> ptrs_;
  std::vector<std::uint8_t> scratch_;
  std::vector<RuntimeRegion> regions_;
  const InvocationIds* ids_ = nullptr;
};

void check_dispatch(const ProgramImpl& p, Groups groups, const BufferMap& buffers,
                    const InterpLimits& limits) {
  for (const auto& slot : p.declared_bindings) {
    if (!buffers.contains(slot)) {
      throw Error(ErrorCode::MissingBinding,
                  "set " + std::to_string(slot.set) + " binding " + std::to_string(slot.binding));
    }
  }
  std::uint64_t invocations = saturating_mul(groups.count(), p.local_size.count());
  if (invocations > limits.max_invocations) {
    throw Error(ErrorCode::LimitExceeded, std::to_string(invocations) + " invocations exceeds " +
                                              std::to_string(limits.max_invocations));
  }
  if (p.retired_per_invocation > limits.max_instructions_per_invocation) {
    throw Error(ErrorCode::LimitExceeded,
                std::to_string(p.retired_per_invocation) + " instructions per invocation exceeds " +
                    std::to_string(limits.max_instructions_per_invocation));
  }
}

ExecStats stats_for(const ProgramImpl& p, Groups groups) {
  ExecStats s;
  s.invocations = groups.count() * p.local_size.count();
  s.instructions = s.invocations * p.retired_per_invocation;
  return s;
}

}  // namespace

ExecStats execute(const Program& program, Groups groups, const BufferMap& buffers,
                  const InterpLimits& limits) {
  const auto& p = program.impl();
  check_dispatch(p, groups, buffers, limits);
  if (groups.count() == 0) return {};
  Machine m(p, buffers, groups);
  for (std::uint32_t gz = 0; gz < groups.z; ++gz) {
    for (std::uint32_t gy = 0; gy < groups.y; ++gy) {
      for (std::uint32_t gx = 0; gx < groups.x; ++gx) m.run_workgroup(gx, gy, gz);
    }
  }
  return stats_for(p, groups);
}

ExecStats execute_parallel(const Program& program, Groups groups, const BufferMap& buffers,
                           const InterpLimits& limits) {
  const auto& p = program.impl();
  check_dispatch(p, groups, buffers, limits);
  const std::int64_t total = static_cast<std::int64_t>(groups.count());
  if (total == 0) return {};

  std::int64_t first_failure = std::numeric_limits<std::int64_t>::max();
  std::exception_ptr failure;

#pragma omp parallel
  {
    std::optional<Machine> m;
    bool stopped = false;
    try {
      m.emplace(p, buffers, groups);
    } catch (...) {
      stopped = true;
#pragma omp critical(girp_interp_failure)
      if (!failure) {
        first_failure = -1;
        failure = std::current_exception();
      }
    }

#pragma omp for schedule(static)
    for (std::int64_t g = 0; g < total; ++g) {
      if (stopped) continue;
      auto gx = static_cast<std::uint32_t>(g % groups.x);
      auto gy = static_cast<std::uint32_t>((g / groups.x) % groups.y);
      auto gz = static_cast<std::uint32_t>(g / (std::int64_t{groups.x} * groups.y));
      try {
        m->run_workgroup(gx, gy, gz);
      } catch (...) {
        // Chunks are contiguous and each stops at its own first failure, so
        // the smallest index seen is the serial order's first failure.
        stopped = true;
#pragma omp critical(girp_interp_failure)
        if (g < first_failure) {
          first_failure = g;
          failure = std::current_exception();
        }
      }
    }
  }

  if (failure) std::rethrow_exception(failure);
  return stats_for(p, groups);
}

ExecStats execute(const spirv::SpirvModule& module, std::string_view entry, Groups groups,
                  const BufferMap& buffers, const InterpLimits& limits) {
  return execute(Program::compile(module, entry), groups, buffers, limits);
}

}  // namespace girp::interp
