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

#include "girp/executor/executor.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_map>
#include <vector>

#include "girp/error.hpp"
#include "girp/log.hpp"

namespace girp::exec {
namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_ns(Clock::time_point from, Clock::time_point to) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(to - from).count());
}

}  // namespace

std::string BackendCapabilities::describe() const {
  return "name=" + name + ";spirv=" + (full_spirv ? "full" : "subset") +
         ";max_buffer_bytes=" + std::to_string(max_buffer_bytes) +
         ";max_invocations=" + std::to_string(max_invocations);
}

Backend parse_backend(std::string_view name) {
  if (name == "interp") return Backend::Interp;
  if (name == "gpu") return Backend::Gpu;
  throw Error(ErrorCode::ConfigError, "unknown backend '" + std::string(name) + "'");
}

std::string_view backend_name(Backend backend) {
  return backend == Backend::Interp ? "interp" : "gpu";
}

InterpreterExecutor::InterpreterExecutor(ExecutorOptions options) : options_(options) {}

BackendCapabilities InterpreterExecutor::capabilities() const {
  return {"reference-interp", false, options_.max_buffer_bytes, options_.limits.max_invocations};
}

Digest InterpreterExecutor::load(const spirv::SpirvModule& module) {
  const Digest& hash = module.content_hash();
  if (modules_.contains(hash)) return hash;

  auto info = spirv::reflect(module);
  std::string rejected;
  for (const auto& ep : info.entry_points) {
    if (ep.execution_model != spirv::ExecutionModel::GLCompute) continue;
    auto report = interp::dry_run(module, ep.name);
    if (!report.compliant()) rejected += (rejected.empty() ? "" : "; ") + ep.name + ": " + report.summary();
  }
  if (!rejected.empty()) throw Error(ErrorCode::BackendReject, rejected);

  modules_.emplace(hash, module);
  return hash;
}

PipelineHandle InterpreterExecutor::create_pipeline(const Digest& module_hash,
                                                    std::string_view entry) {
  auto start = Clock::now();
  auto it = modules_.find(module_hash);
  if (it == modules_.end()) throw Error(ErrorCode::UnknownModule, module_hash.hex());

  auto program = interp::Program::compile(it->second, entry);
  PipelineHandle handle{next_pipeline_++, module_hash, std::string(entry), program.local_size()};
  pipelines_.emplace(handle.id, Pipeline{handle, std::move(program)});
  last_create_ns_ = elapsed_ns(start, Clock::now());
  return handle;
}

TimingBreakdown InterpreterExecutor::dispatch(const PipelineHandle& pipeline, Groups groups,
                                              const BufferMap& buffers) {
  TimingBreakdown timing;
  auto t0 = Clock::now();

  auto it = pipelines_.find(pipeline.id);
  if (it == pipelines_.end()) {
    throw Error(ErrorCode::UnknownPipeline, std::to_string(pipeline.id));
  }
  const auto& program = it->second.program;
  for (const auto& slot : program.declared_bindings()) {
    if (!buffers.contains(slot)) {
      throw Error(ErrorCode::MissingBinding,
                  "set " + std::to_string(slot.set) + " binding " + std::to_string(slot.binding));
    }
  }

  // Stage every distinct buffer once; bindings that alias the same storage
  // keep aliasing the same staging copy.
  std::unordered_map<const std::uint8_t*, std::vector<std::uint8_t>> staging;
  BufferMap staged;
  for (const auto& [slot, span] : buffers) {
    auto [pos, inserted] = staging.try_emplace(span.data());
    if (inserted) pos->second.assign(span.begin(), span.end());
    staged.emplace(slot, std::span<std::uint8_t>(pos->second));
  }
  auto t1 = Clock::now();
  timing.prepare_ns = elapsed_ns(t0, t1);

  if (options_.parallel) {
    interp::execute_parallel(program, groups, staged, options_.limits);
  } else {
    interp::execute(program, groups, staged, options_.limits);
  }
  auto t2 = Clock::now();
  timing.execute_ns = elapsed_ns(t1, t2);

  for (const auto& [slot, span] : buffers) {
    const auto& copy = staging.at(span.data());
    std::copy_n(copy.begin(), std::min(copy.size(), span.size()), span.begin());
  }
  timing.readback_ns = elapsed_ns(t2, Clock::now());
  return timing;
}

std::unique_ptr<Executor> make_executor(Backend backend, const ExecutorOptions& options) {
  switch (backend) {
    case Backend::Interp:
      return std::make_unique<InterpreterExecutor>(options);
    case Backend::Gpu:
      throw Error(ErrorCode::BackendUnavailable, "this build has no Vulkan backend");
  }
  return nullptr;
}

}  // namespace girp::exec
