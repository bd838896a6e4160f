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

#include "girp/spirv/module.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "girp/error.hpp"
#include "girp/spirv/opcodes.hpp"

namespace girp::spirv {

Header parse_header(ByteSpan bytes) {
  if (bytes.size() < kHeaderWords * 4) {
    throw Error(ErrorCode::TooShort, std::to_string(bytes.size()) + " bytes");
  }
  if (bytes.size() % 4 != 0) {
    throw Error(ErrorCode::Misaligned, std::to_string(bytes.size()) + " bytes");
  }
  std::uint32_t magic = load_le32(bytes.data());
  if (magic != kMagic) throw Error(ErrorCode::BadMagic, "0x" + to_hex(bytes.first(4)));
  if (load_le32(bytes.data() + 16) != 0) throw Error(ErrorCode::BadSchema);

  std::uint32_t version = load_le32(bytes.data() + 4);
  Header h;
  h.version = {(version >> 16) & 0xff, (version >> 8) & 0xff};
  h.generator = load_le32(bytes.data() + 8);
  h.bound = load_le32(bytes.data() + 12);
  return h;
}

SpirvModule SpirvModule::from_bytes(ByteSpan bytes) {
  parse_header(bytes);
  std::vector<std::uint32_t> words(bytes.size() / 4);
  for (std::size_t i = 0; i < words.size(); ++i) words[i] = load_le32(bytes.data() + 4 * i);
  return SpirvModule(std::move(words), sha256(bytes));
}

SpirvModule SpirvModule::from_words(std::vector<std::uint32_t> words) {
  Bytes raw(words.size() * 4);
  for (std::size_t i = 0; i < words.size(); ++i) store_le32(raw.data() + 4 * i, words[i]);
  parse_header(raw);
  return SpirvModule(std::move(words), sha256(raw));
}

Bytes SpirvModule::bytes() const {
  Bytes raw(words_.size() * 4);
  for (std::size_t i = 0; i < words_.size(); ++i) store_le32(raw.data() + 4 * i, words_[i]);
  return raw;
}

Digest hash_module(ByteSpan bytes) { return sha256(bytes); }

const EntryPoint* ModuleInfo::find_entry(std::string_view name) const {
  for (const auto& ep : entry_points) {
    if (ep.name == name) return &ep;
  }
  return nullptr;
}

std::string_view execution_model_name(ExecutionModel model) {
  switch (model) {
    case ExecutionModel::GLCompute: return "GLCompute";
    case ExecutionModel::Vertex: return "Vertex";
    case ExecutionModel::Fragment: return "Fragment";
    case ExecutionModel::Other: return "Other";
  }
  return "Other";
}

std::optional<std::size_t> decode_literal_string(std::span<const std::uint32_t> words,
                                                 std::string& out) {
  out.clear();
  for (std::size_t w = 0; w < words.size(); ++w) {
    for (int b = 0; b < 4; ++b) {
      char c = static_cast<char>((words[w] >> (8 * b)) & 0xff);
      if (c == '\0') return w + 1;
      out.push_back(c);
    }
  }
  return std::nullopt;
}

namespace {

ExecutionModel classify_model(std::uint32_t code) {
  switch (code) {
    case execution_model::GLCompute: return ExecutionModel::GLCompute;
    case execution_model::Vertex: return ExecutionModel::Vertex;
    case execution_model::Fragment: return ExecutionModel::Fragment;
    default: return ExecutionModel::Other;
  }
}

struct VariableDecl {
  std::uint32_t pointer_type = 0;
  std::uint32_t storage = 0;
};

}  // namespace

ModuleInfo reflect(const SpirvModule& module) {
  auto words = module.words();
  ModuleInfo info;
  {
    std::uint32_t version = words[1];
    info.version = {(version >> 16) & 0xff, (version >> 8) & 0xff};
    info.bound = words[3];
  }

  std::map<std::uint32_t, LocalSize> local_sizes;  // function id -> size
  std::unordered_map<std::uint32_t, std::uint32_t> sets;
  std::unordered_map<std::uint32_t, std::uint32_t> binding_numbers;
  std::vector<std::uint32_t> binding_order;  // ids in decoration order
  std::unordered_set<std::uint32_t> buffer_blocks;
  std::unordered_map<std::uint32_t, std::uint32_t> pointee_of;  // pointer type -> pointee
  std::unordered_map<std::uint32_t, VariableDecl> variables;
  std::set<std::string> entry_names;

  std::size_t i = kHeaderWords;
  while (i < words.size()) {
    std::uint32_t first = words[i];
    std::uint32_t count = first >> 16;
    std::uint16_t opcode = first & 0xffff;
    if (count == 0) throw Error(ErrorCode::ZeroWordCount, "at word " + std::to_string(i));
    if (count > words.size() - i) {
      throw Error(ErrorCode::TruncatedInstruction,
                  "opcode " + std::to_string(opcode) + " at word " + std::to_string(i) +
                      " declares " + std::to_string(count) + " words, " +
                      std::to_string(words.size() - i) + " remain");
    }
    auto operands = words.subspan(i + 1, count - 1);
    auto need = [&](std::size_t n) {
      if (operands.size() < n) {
        throw Error(ErrorCode::TruncatedInstruction,
                    "opcode " + std::to_string(opcode) + " at word " + std::to_string(i) +
                        " is missing operands");
      }
    };

    switch (opcode) {
      case op::EntryPoint: {
        need(3);
        EntryPoint ep;
        ep.model_code = operands[0];
        ep.execution_model = classify_model(operands[0]);
        ep.function_id = operands[1];
        if (!decode_literal_string(operands.subspan(2), ep.name)) {
          throw Error(ErrorCode::TruncatedInstruction, "unterminated entry point name");
        }
        if (ep.name.empty()) throw Error(ErrorCode::MalformedModule, "empty entry point name");
        if (!entry_names.insert(ep.name).second) {
          throw Error(ErrorCode::DuplicateEntryPointName, ep.name);
        }
        info.entry_points.push_back(std::move(ep));
        break;
      }
      case op::ExecutionMode: {
        need(2);
        if (operands[1] == execution_mode::LocalSize) {
          need(5);
          LocalSize ls{operands[2], operands[3], operands[4]};
          if (ls.x == 0 || ls.y == 0 || ls.z == 0) {
            throw Error(ErrorCode::MalformedModule, "zero local size component");
          }
          local_sizes[operands[0]] = ls;
        }
        break;
      }
      case op::Decorate: {
        need(2);
        std::uint32_t target = operands[0];
        switch (operands[1]) {
          case decoration::DescriptorSet:
            need(3);
            sets[target] = operands[2];
            break;
          case decoration::Binding:
            need(3);
            if (!binding_numbers.contains(target)) binding_order.push_back(target);
            binding_numbers[target] = operands[2];
            break;
          case decoration::BufferBlock:
            buffer_blocks.insert(target);
            break;
          default:
            break;
        }
        break;
      }
      case op::TypePointer:
        need(3);
        pointee_of[operands[0]] = operands[2];
        break;
      case op::Variable:
        need(3);
        variables[operands[1]] = {operands[0], operands[2]};
        break;
      default:
        break;
    }
    i += count;
  }

  for (auto& ep : info.entry_points) {
    if (ep.execution_model != ExecutionModel::GLCompute) continue;
    auto it = local_sizes.find(ep.function_id);
    ep.local_size = it != local_sizes.end() ? it->second : LocalSize{};
  }

  std::set<DescriptorSlot> seen;
  for (std::uint32_t id : binding_order) {
    BindingSlot slot;
    slot.result_id = id;
    slot.slot.binding = binding_numbers[id];
    auto set_it = sets.find(id);
    slot.slot.set = set_it != sets.end() ? set_it->second : 0;
    if (!seen.insert(slot.slot).second) {
      throw Error(ErrorCode::DuplicateBinding, "set " + std::to_string(slot.slot.set) +
                                                   " binding " +
                                                   std::to_string(slot.slot.binding));
    }
    if (auto var = variables.find(id); var != variables.end()) {
      if (var->second.storage == storage_class::StorageBuffer) {
        slot.kind = BindingKind::StorageBuffer;
      } else if (var->second.storage == storage_class::Uniform) {
        // Pre-1.3 modules express storage buffers as Uniform + BufferBlock.
        auto pointee = pointee_of.find(var->second.pointer_type);
        if (pointee != pointee_of.end() && buffer_blocks.contains(pointee->second)) {
          slot.kind = BindingKind::StorageBuffer;
        }
      }
    }
    info.bindings.push_back(slot);
  }
  std::sort(info.bindings.begin(), info.bindings.end(),
            [](const BindingSlot& a, const BindingSlot& b) { return a.slot < b.slot; });
  return info;
}

ModuleInfo reflect_bytes(ByteSpan bytes) { return reflect(SpirvModule::from_bytes(bytes)); }

}  // namespace girp::spirv
