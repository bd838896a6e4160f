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

#ifndef GIRP_EXECUTOR_EXECUTOR_HPP
#define GIRP_EXECUTOR_EXECUTOR_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "girp/digest.hpp"
#include "girp/interp/interpreter.hpp"
#include "girp/spirv/module.hpp"

namespace girp::exec {

using interp::BufferMap;
using interp::Groups;

struct PipelineHandle {
  std::uint64_t id = 0;
  Digest module_hash;
  std::string entry;
  spirv::LocalSize local_size;

  bool operator==(const PipelineHandle&) const = default;
};

// Phases of one synchronous dispatch, in nanoseconds on the steady clock.
struct TimingBreakdown {
  std::uint64_t prepare_ns = 0;
  std::uint64_t execute_ns = 0;
  std::uint64_t readback_ns = 0;

  std::uint64_t total_ns() const { return prepare_ns + execute_ns + readback_ns; }
  bool operator==(const TimingBreakdown&) const = default;
};

struct BackendCapabilities {
  std::string name;
  bool full_spirv = false;
  std::uint64_t max_buffer_bytes = 0;
  std::uint64_t max_invocations = 0;

  /// "name=reference-interp;spirv=subset;max_buffer_bytes=...;max_invocations=..."
  std::string describe() const;
  bool operator==(const BackendCapabilities&) const = default;
};

enum class Backend { Interp, Gpu };

Backend parse_backend(std::string_view name);
std::string_view backend_name(Backend backend);

// Compute backend boundary. Calls on one instance must be serialized by the
// caller; distinct instances are independent.
class Executor {
 public:
  virtual ~Executor() = default;

  virtual BackendCapabilities capabilities() const = 0;

  /// Makes the module resident. Idempotent per content hash.
  /// Errors: reflection errors, BackendReject.
  virtual Digest load(const spirv::SpirvModule& module) = 0;

  /// Errors: UnknownModule, EntryNotFound, NotCompute.
  virtual PipelineHandle create_pipeline(const Digest& module_hash, std::string_view entry) = 0;

  /// Synchronous: results are in the bound buffers on return. A failed
  /// dispatch leaves every bound buffer untouched.
  /// Errors: UnknownPipeline, MissingBinding, interpreter traps.
  virtual TimingBreakdown dispatch(const PipelineHandle& pipeline, Groups groups,
                                   const BufferMap& buffers) = 0;

  virtual std::size_t resident_modules() const = 0;

  /// Wall time of the most recent create_pipeline, in nanoseconds.
  virtual std::uint64_t last_pipeline_create_ns() const = 0;
};

struct ExecutorOptions {
  interp::InterpLimits limits;
  std::uint64_t max_buffer_bytes = 256ull << 20;
  bool parallel = false;  // OpenMP workgroup distribution
};

// Reference backend built on the interpreter. Dispatch stages the bound
// buffers into private copies, runs, and copies results back, which is what
// makes failed dispatches side-effect free.
class InterpreterExecutor final : public Executor {
 public:
  explicit InterpreterExecutor(ExecutorOptions options = {});

  BackendCapabilities capabilities() const override;
  Digest load(const spirv::SpirvModule& module) override;
  PipelineHandle create_pipeline(const Digest& module_hash, std::string_view entry) override;
  TimingBreakdown dispatch(const PipelineHandle& pipeline, Groups groups,
                           const BufferMap& buffers) override;
  std::size_t resident_modules() const override { return modules_.size(); }
  std::uint64_t last_pipeline_create_ns() const override { return last_create_ns_; }

 private:
  struct Pipeline {
    PipelineHandle handle;
    interp::Program program;
  };

  ExecutorOptions options_;
  std::map<Digest, spirv::SpirvModule> modules_;
  std::map<std::uint64_t, Pipeline> pipelines_;
  std::uint64_t next_pipeline_ = 1;
  std::uint64_t last_create_ns_ = 0;
};

/// Errors: BackendUnavailable when the backend was not built.
std::unique_ptr<Executor> make_executor(Backend backend, const ExecutorOptions& options = {});

}  // namespace girp::exec

#endif  // GIRP_EXECUTOR_EXECUTOR_HPP
