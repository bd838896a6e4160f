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

#include <algorithm>
#include <optional>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "girp/error.hpp"
#include "girp/spirv/opcodes.hpp"
#include "program_impl.hpp"

namespace girp::interp {
namespace {

namespace op = spirv::op;
namespace sc = spirv::storage_class;
namespace deco = spirv::decoration;

// Raised inside the decoder when an operand refers to a result that was
// itself rejected; only used while collecting a compliance report.
struct PoisonedOperand {};

struct TypeInfo {
  enum class Kind { Void, Bool, Int, Float, Vector, Array, RuntimeArray, Struct, Pointer, Function };
  Kind kind = Kind::Void;
  bool is_signed = false;
  std::uint32_t elem = 0;   // Vector/Array/RuntimeArray element, Pointer pointee
  std::uint32_t count = 0;  // Vector/Array length
  std::int64_t stride = 0;  // Array/RuntimeArray
  std::vector<std::uint32_t> members;
  std::vector<std::int64_t> offsets;
  std::uint32_t storage = 0;
  std::int64_t size = 0;    // bytes; 0 for runtime-sized
  bool sized = true;
};

enum class IdKind { Type, Value, Pointer, Poison, Other };

struct IdEntry {
  IdKind kind = IdKind::Other;
  std::uint32_t type = 0;
  std::uint32_t slot = 0;
  bool writable = false;
  bool is_constant = false;
};

enum class NumClass { Int, Float };

struct Shape {
  NumClass cls = NumClass::Int;
  std::uint32_t lanes = 1;
};

const std::unordered_set<std::uint16_t>& module_level_declarations() {
  static const std::unordered_set<std::uint16_t> set = {
      op::Nop,         op::SourceContinued, op::Source,       op::SourceExtension, op::Name,
      op::MemberName,  op::String,          op::Line,         op::NoLine,          op::Extension,
      op::ExtInstImport, op::MemoryModel,   op::EntryPoint,   op::ExecutionMode,   op::Capability,
      op::Decorate,    op::MemberDecorate,  op::ModuleProcessed,
  };
  return set;
}

const std::unordered_set<std::uint16_t>& body_subset() {
  static const std::unordered_set<std::uint16_t> set = {
      op::Label, op::Return, op::Variable, op::AccessChain, op::Load, op::Store,
      op::IAdd,  op::ISub,   op::IMul,     op::UDiv,        op::SDiv, op::FAdd,
      op::FSub,  op::FMul,   op::FDiv,     op::CompositeExtract, op::Line, op::NoLine,
      op::Nop,
  };
  return set;
}

std::string storage_name(std::uint32_t storage) {
  switch (storage) {
    case sc::UniformConstant: return "UniformConstant";
    case sc::Input: return "Input";
    case sc::Uniform: return "Uniform";
    case sc::Output: return "Output";
    case sc::Workgroup: return "Workgroup";
    case sc::Private: return "Private";
    case sc::Function: return "Function";
    case sc::PushConstant: return "PushConstant";
    case sc::StorageBuffer: return "StorageBuffer";
    default: return "storage class " + std::to_string(storage);
  }
}

class Compiler {
 public:
  Compiler(const spirv::SpirvModule& module, std::string_view entry, bool collect)
      : module_(module), entry_name_(entry), collect_(collect) {}

  void run();

  ProgramImpl take_program() { return std::move(impl_); }
  ComplianceReport take_report() { return std::move(report_); }

 private:
  using Operands = std::span<const std::uint32_t>;

  [[noreturn]] void malformed(const std::string& what) const {
    throw Error(ErrorCode::MalformedModule, what + " (word " + std::to_string(word_) + ")");
  }

  // Records an unsupported construct. In compile mode this aborts.
  void reject(std::uint16_t opcode, const std::string& detail) {
    if (!collect_) {
      throw Error(ErrorCode::UnsupportedOpcode,
                  "opcode " + std::to_string(opcode) + (detail.empty() ? "" : ": " + detail));
    }
    report_.violations.push_back({opcode, detail});
  }

  void collect_decorations();
  void module_instruction(std::uint16_t opcode, Operands ops);
  void body_instruction(std::uint16_t opcode, Operands ops);
  void declare_type(std::uint16_t opcode, Operands ops);
  void declare_constant(std::uint16_t opcode, Operands ops);
  void declare_global(Operands ops);
  void declare_local(Operands ops);
  void access_chain(Operands ops);
  void load(Operands ops);
  void store(Operands ops);
  void binary(std::uint16_t opcode, Operands ops);
  void extract(Operands ops);

  static std::optional<std::uint32_t> result_id_of(std::uint16_t opcode, Operands ops);

  void need(Operands ops, std::size_t n) const {
    if (ops.size() < n) malformed("opcode " + std::to_string(opcode_) + " is missing operands");
  }

  void define(std::uint32_t id, IdEntry entry) {
    if (!ids_.emplace(id, entry).second) malformed("id " + std::to_string(id) + " defined twice");
  }

  const IdEntry& lookup(std::uint32_t id) const {
    auto it = ids_.find(id);
    if (it == ids_.end()) malformed("use of undefined id " + std::to_string(id));
    if (it->second.kind == IdKind::Poison) throw PoisonedOperand{};
    return it->second;
  }

  const TypeInfo& type(std::uint32_t id) const {
    const auto& e = lookup(id);
    if (e.kind != IdKind::Type) malformed("id " + std::to_string(id) + " is not a type");
    return types_.at(id);
  }

  std::optional<Shape> shape_of(std::uint32_t type_id) const;
  const IdEntry& value(std::uint32_t id, Shape* shape) const;
  const IdEntry& pointer(std::uint32_t id) const;
  std::uint32_t constant_u32(std::uint32_t id) const;
  std::uint32_t new_value_slot(const Lanes& init = {}) {
    impl_.initial_values.push_back(init);
    return static_cast<std::uint32_t>(impl_.initial_values.size() - 1);
  }
  std::uint32_t new_pointer_slot(Ptr init) {
    impl_.initial_ptrs.push_back(init);
    return static_cast<std::uint32_t>(impl_.initial_ptrs.size() - 1);
  }
  std::uint32_t scratch_region(RegionKind kind, std::uint32_t size, std::string name,
                               std::uint32_t builtin = 0);

  const spirv::SpirvModule& module_;
  std::string_view entry_name_;
  bool collect_;

  ProgramImpl impl_;
  ComplianceReport report_;

  std::size_t word_ = 0;
  std::uint16_t opcode_ = 0;
  std::uint32_t entry_function_ = 0;

  std::unordered_map<std::uint32_t, IdEntry> ids_;
  std::unordered_map<std::uint32_t, TypeInfo> types_;

  std::unordered_map<std::uint32_t, std::int64_t> array_strides_;
  std::unordered_map<std::uint32_t, std::unordered_map<std::uint32_t, std::int64_t>> member_offsets_;
  std::unordered_map<std::uint32_t, std::uint32_t> builtins_;
  std::unordered_map<std::uint32_t, std::uint32_t> bindings_;
  std::unordered_map<std::uint32_t, std::uint32_t> sets_;
  std::unordered_set<std::uint32_t> buffer_blocks_;

  enum class State { Module, EntryFunction, OtherFunction };
  State state_ = State::Module;
  bool seen_label_ = false;
  bool returned_ = false;
  bool scan_only_ = false;
  bool saw_entry_body_ = false;
};

std::uint32_t Compiler::scratch_region(RegionKind kind, std::uint32_t size, std::string name,
                                       std::uint32_t builtin) {
  RegionDesc r;
  r.kind = kind;
  r.size = size;
  r.builtin = builtin;
  r.name = std::move(name);
  r.scratch_offset = static_cast<std::uint32_t>(impl_.scratch_init.size());
  impl_.scratch_init.resize(impl_.scratch_init.size() + ((size + 3) & ~3u), 0);
  impl_.regions.push_back(std::move(r));
  return static_cast<std::uint32_t>(impl_.regions.size() - 1);
}

std::optional<Shape> Compiler::shape_of(std::uint32_t type_id) const {
  const auto& t = types_.at(type_id);
  switch (t.kind) {
    case TypeInfo::Kind::Int: return Shape{NumClass::Int, 1};
    case TypeInfo::Kind::Float: return Shape{NumClass::Float, 1};
    case TypeInfo::Kind::Vector: {
      const auto& e = types_.at(t.elem);
      return Shape{e.kind == TypeInfo::Kind::Float ? NumClass::Float : NumClass::Int, t.count};
    }
    default: return std::nullopt;
  }
}

const IdEntry& Compiler::value(std::uint32_t id, Shape* shape) const {
  const auto& e = lookup(id);
  if (e.kind != IdKind::Value) malformed("id " + std::to_string(id) + " is not a value");
  if (shape != nullptr) *shape = *shape_of(e.type);
  return e;
}

const IdEntry& Compiler::pointer(std::uint32_t id) const {
  const auto& e = lookup(id);
  if (e.kind != IdKind::Pointer) malformed("id " + std::to_string(id) + " is not a pointer");
  return e;
}

std::uint32_t Compiler::constant_u32(std::uint32_t id) const {
  const auto& e = lookup(id);
  if (e.kind != IdKind::Value || !e.is_constant) {
    malformed("id " + std::to_string(id) + " is not a constant");
  }
  return impl_.initial_values[e.slot][0];
}

std::optional<std::uint32_t> Compiler::result_id_of(std::uint16_t opcode, Operands ops) {
  switch (opcode) {
    case op::TypeVoid: case op::TypeBool: case op::TypeInt: case op::TypeFloat:
    case op::TypeVector: case op::TypeArray: case op::TypeRuntimeArray: case op::TypeStruct:
    case op::TypePointer: case op::TypeFunction: case op::Label:
      if (!ops.empty()) return ops[0];
      return std::nullopt;
    case op::Store: case op::Return: case op::Line: case op::NoLine: case op::Nop:
      return std::nullopt;
    default:
      if (ops.size() >= 2) return ops[1];
      return std::nullopt;
  }
}

void Compiler::collect_decorations() {
  auto words = module_.words();
  for (std::size_t i = spirv::kHeaderWords; i < words.size();) {
    std::uint32_t count = words[i] >> 16;
    std::uint16_t opcode = words[i] & 0xffff;
    auto ops = words.subspan(i + 1, count - 1);
    if (opcode == op::Decorate && ops.size() >= 2) {
      std::uint32_t target = ops[0];
      switch (ops[1]) {
        case deco::ArrayStride: if (ops.size() >= 3) array_strides_[target] = ops[2]; break;
        case deco::BuiltIn: if (ops.size() >= 3) builtins_[target] = ops[2]; break;
        case deco::Binding: if (ops.size() >= 3) bindings_[target] = ops[2]; break;
        case deco::DescriptorSet: if (ops.size() >= 3) sets_[target] = ops[2]; break;
        case deco::BufferBlock: buffer_blocks_.insert(target); break;
        default: break;
      }
    } else if (opcode == op::MemberDecorate && ops.size() >= 4 && ops[2] == deco::Offset) {
      member_offsets_[ops[0]][ops[1]] = ops[3];
    }
    i += count;
  }
}

void Compiler::run() {
  // Reflection validates the instruction framing; from here on every
  // instruction's word count is known to be in range.
  auto info = spirv::reflect(module_);
  const auto* entry = info.find_entry(entry_name_);
  if (entry == nullptr) throw Error(ErrorCode::EntryNotFound, std::string(entry_name_));
  if (entry->execution_model != spirv::ExecutionModel::GLCompute) {
    if (!collect_) {
      throw Error(ErrorCode::NotCompute,
                  std::string(entry_name_) + " is " +
                      std::string(spirv::execution_model_name(entry->execution_model)));
    }
    report_.violations.push_back({op::EntryPoint, "entry point is not GLCompute"});
    return;
  }
  entry_function_ = entry->function_id;
  impl_.local_size = *entry->local_size;
  for (const auto& b : info.bindings) impl_.declared_bindings.push_back(b.slot);

  collect_decorations();

  auto words = module_.words();
  for (std::size_t i = spirv::kHeaderWords; i < words.size();) {
    std::uint32_t count = words[i] >> 16;
    opcode_ = words[i] & 0xffff;
    word_ = i;
    auto ops = words.subspan(i + 1, count - 1);
    i += count;

    try {
      switch (state_) {
        case State::Module: module_instruction(opcode_, ops); break;
        case State::EntryFunction: body_instruction(opcode_, ops); break;
        case State::OtherFunction:
          if (opcode_ == op::FunctionEnd) state_ = State::Module;
          break;
      }
    } catch (const PoisonedOperand&) {
      if (auto id = result_id_of(opcode_, ops)) ids_[*id] = IdEntry{IdKind::Poison};
    }
  }
  if (state_ != State::Module) malformed("function without OpFunctionEnd");
  if (!saw_entry_body_) malformed("entry point function body not found");
}

void Compiler::module_instruction(std::uint16_t opcode, Operands ops) {
  if (module_level_declarations().contains(opcode)) return;
  switch (opcode) {
    case op::TypeVoid: case op::TypeBool: case op::TypeInt: case op::TypeFloat:
    case op::TypeVector: case op::TypeArray: case op::TypeRuntimeArray: case op::TypeStruct:
    case op::TypePointer: case op::TypeFunction:
      declare_type(opcode, ops);
      return;
    case op::Constant: case op::ConstantComposite:
      declare_constant(opcode, ops);
      return;
    case op::Variable:
      declare_global(ops);
      return;
    case op::Function:
      need(ops, 4);
      if (ops[1] == entry_function_) {
        state_ = State::EntryFunction;
        saw_entry_body_ = true;
      } else {
        state_ = State::OtherFunction;
      }
      return;
    case op::SpecConstantTrue: case op::SpecConstantFalse: case op::SpecConstant:
    case op::SpecConstantComposite: case op::SpecConstantOp:
      reject(opcode, "specialization constants are not evaluated");
      if (auto id = result_id_of(opcode, ops)) ids_[*id] = IdEntry{IdKind::Poison};
      return;
    default:
      reject(opcode, "unsupported module-level instruction");
      if (auto id = result_id_of(opcode, ops)) ids_[*id] = IdEntry{IdKind::Poison};
      return;
  }
}

void Compiler::declare_type(std::uint16_t opcode, Operands ops) {
  need(ops, 1);
  std::uint32_t id = ops[0];
  TypeInfo t;
  using K = TypeInfo::Kind;
  auto poison = [&](const std::string& why) {
    reject(opcode, why);
    define(id, IdEntry{IdKind::Poison});
  };

  switch (opcode) {
    case op::TypeVoid: t.kind = K::Void; t.sized = false; break;
    case op::TypeBool: t.kind = K::Bool; t.size = 4; break;
    case op::TypeInt:
      need(ops, 3);
      if (ops[1] != 32) return poison(std::to_string(ops[1]) + "-bit integers");
      t.kind = K::Int;
      t.is_signed = ops[2] != 0;
      t.size = 4;
      break;
    case op::TypeFloat:
      need(ops, 2);
      if (ops[1] != 32) return poison(std::to_string(ops[1]) + "-bit floats");
      t.kind = K::Float;
      t.size = 4;
      break;
    case op::TypeVector: {
      need(ops, 3);
      const auto& e = type(ops[1]);
      if (e.kind != K::Int && e.kind != K::Float) return poison("vector of non-numeric type");
      if (ops[2] < 2 || ops[2] > 4) malformed("vector component count " + std::to_string(ops[2]));
      t.kind = K::Vector;
      t.elem = ops[1];
      t.count = ops[2];
      t.size = 4 * std::int64_t{ops[2]};
      break;
    }
    case op::TypeArray: {
      need(ops, 3);
      const auto& e = type(ops[1]);
      if (!e.sized || e.size == 0) malformed("array of unsized element");
      t.kind = K::Array;
      t.elem = ops[1];
      t.count = constant_u32(ops[2]);
      auto it = array_strides_.find(id);
      t.stride = it != array_strides_.end() ? it->second : e.size;
      t.size = t.stride * t.count;
      break;
    }
    case op::TypeRuntimeArray: {
      need(ops, 2);
      const auto& e = type(ops[1]);
      if (!e.sized || e.size == 0) malformed("runtime array of unsized element");
      t.kind = K::RuntimeArray;
      t.elem = ops[1];
      auto it = array_strides_.find(id);
      t.stride = it != array_strides_.end() ? it->second : e.size;
      t.size = 0;
      t.sized = false;
      break;
    }
    case op::TypeStruct: {
      t.kind = K::Struct;
      std::int64_t natural = 0;
      auto decorated = member_offsets_.find(id);
      for (std::size_t m = 1; m < ops.size(); ++m) {
        const auto& mt = type(ops[m]);
        if (!mt.sized && mt.kind != K::RuntimeArray) malformed("struct member of unsized type");
        if (!mt.sized && m + 1 != ops.size()) malformed("runtime array must be the last member");
        std::int64_t off = natural;
        if (decorated != member_offsets_.end()) {
          auto o = decorated->second.find(static_cast<std::uint32_t>(m - 1));
          if (o != decorated->second.end()) off = o->second;
        }
        t.members.push_back(ops[m]);
        t.offsets.push_back(off);
        natural = off + mt.size;
        t.size = std::max(t.size, off + mt.size);
        if (!mt.sized) t.sized = false;
      }
      break;
    }
    case op::TypePointer:
      need(ops, 3);
      t.kind = K::Pointer;
      t.storage = ops[1];
      t.elem = ops[2];
      // The pointee may be a forward reference (OpTypeForwardPointer is not
      // supported, so this only happens in malformed modules).
      type(ops[2]);
      t.size = 0;
      break;
    case op::TypeFunction:
      t.kind = K::Function;
      t.sized = false;
      break;
    default:
      malformed("not a type");
  }
  define(id, IdEntry{IdKind::Type});
  types_[id] = std::move(t);
}

void Compiler::declare_constant(std::uint16_t opcode, Operands ops) {
  need(ops, 2);
  std::uint32_t result_type = ops[0];
  std::uint32_t id = ops[1];
  const auto& t = type(result_type);
  Lanes lanes{};
  if (opcode == op::Constant) {
    need(ops, 3);
    if (t.kind != TypeInfo::Kind::Int && t.kind != TypeInfo::Kind::Float) {
      reject(opcode, "constant of non-scalar type");
      define(id, IdEntry{IdKind::Poison});
      return;
    }
    lanes[0] = ops[2];
  } else {
    if (t.kind != TypeInfo::Kind::Vector) {
      reject(opcode, "non-vector composite constant");
      define(id, IdEntry{IdKind::Poison});
      return;
    }
    if (ops.size() - 2 != t.count) malformed("composite constant arity");
    for (std::uint32_t c = 0; c < t.count; ++c) lanes[c] = constant_u32(ops[2 + c]);
  }
  define(id, IdEntry{IdKind::Value, result_type, new_value_slot(lanes), false, true});
}

void Compiler::declare_global(Operands ops) {
  need(ops, 3);
  std::uint32_t ptr_type = ops[0];
  std::uint32_t id = ops[1];
  std::uint32_t storage = ops[2];
  const auto& pt = type(ptr_type);
  if (pt.kind != TypeInfo::Kind::Pointer) malformed("variable of non-pointer type");
  const auto& pointee = types_.at(pt.elem);

  auto poison = [&](const std::string& why) {
    reject(op::Variable, why);
    define(id, IdEntry{IdKind::Poison});
  };

  switch (storage) {
    case sc::Input: {
      auto b = builtins_.find(id);
      if (b == builtins_.end()) return poison("Input variable without a BuiltIn decoration");
      namespace bi = spirv::builtin;
      std::uint32_t lanes = 0;
      switch (b->second) {
        case bi::NumWorkgroups: case bi::WorkgroupId: case bi::LocalInvocationId:
        case bi::GlobalInvocationId:
          lanes = 3;
          break;
        case bi::LocalInvocationIndex:
          lanes = 1;
          break;
        default:
          return poison("BuiltIn " + std::to_string(b->second));
      }
      auto shape = shape_of(pt.elem);
      if (!shape || shape->cls != NumClass::Int || shape->lanes != lanes) {
        malformed("BuiltIn variable of unexpected type");
      }
      auto region = scratch_region(RegionKind::Builtin, 4 * lanes,
                                   "builtin " + std::to_string(b->second), b->second);
      define(id, IdEntry{IdKind::Pointer, ptr_type, new_pointer_slot({region, 0}), false});
      return;
    }
    case sc::StorageBuffer:
    case sc::Uniform: {
      if (storage == sc::Uniform && !buffer_blocks_.contains(pt.elem)) {
        return poison("uniform buffers are not bound by this runtime");
      }
      auto binding = bindings_.find(id);
      if (binding == bindings_.end()) malformed("buffer variable without a Binding decoration");
      RegionDesc r;
      r.kind = RegionKind::Buffer;
      r.slot.binding = binding->second;
      auto set = sets_.find(id);
      r.slot.set = set != sets_.end() ? set->second : 0;
      r.name = "set " + std::to_string(r.slot.set) + " binding " + std::to_string(r.slot.binding);
      impl_.regions.push_back(std::move(r));
      auto region = static_cast<std::uint32_t>(impl_.regions.size() - 1);
      define(id, IdEntry{IdKind::Pointer, ptr_type, new_pointer_slot({region, 0}), true});
      return;
    }
    case sc::Private: {
      if (!pointee.sized) malformed("Private variable of unsized type");
      auto region = scratch_region(RegionKind::Private, static_cast<std::uint32_t>(pointee.size),
                                   "private %" + std::to_string(id));
      if (ops.size() >= 4) {
        const auto& init = value(ops[3], nullptr);
        if (!init.is_constant) malformed("non-constant initializer");
        auto off = impl_.regions[region].scratch_offset;
        auto lanes = shape_of(init.type)->lanes;
        for (std::uint32_t c = 0; c < lanes; ++c) {
          store_le32(impl_.scratch_init.data() + off + 4 * c, impl_.initial_values[init.slot][c]);
        }
      }
      define(id, IdEntry{IdKind::Pointer, ptr_type, new_pointer_slot({region, 0}), true});
      return;
    }
    default:
      return poison(storage_name(storage) + " variables are not supported");
  }
}

void Compiler::body_instruction(std::uint16_t opcode, Operands ops) {
  if (opcode == op::FunctionEnd) {
    if (!returned_ && !scan_only_) malformed("entry body has no OpReturn");
    state_ = State::Module;
    return;
  }

  if (!body_subset().contains(opcode)) {
    std::string detail = "not in the interpreter subset";
    if (opcode == op::FunctionParameter) detail = "entry point with parameters";
    reject(opcode, detail);
    // After an unsupported instruction the block structure can no longer be
    // followed, so the rest of the body is only checked opcode by opcode.
    scan_only_ = true;
    return;
  }
  if (scan_only_ || returned_) return;

  if (opcode != op::Line && opcode != op::NoLine && opcode != op::Nop) {
    if (opcode == op::Label) {
      if (seen_label_) malformed("block without terminator");
      seen_label_ = true;
    } else if (!seen_label_) {
      malformed("instruction before the first OpLabel");
    }
    ++impl_.retired_per_invocation;
  }

  auto before = report_.violations.size();
  switch (opcode) {
    case op::Label:
    case op::Line:
    case op::NoLine:
    case op::Nop:
      break;
    case op::Return:
      returned_ = true;
      break;
    case op::Variable: declare_local(ops); break;
    case op::AccessChain: access_chain(ops); break;
    case op::Load: load(ops); break;
    case op::Store: store(ops); break;
    case op::CompositeExtract: extract(ops); break;
    default: binary(opcode, ops); break;
  }
  if (report_.violations.size() != before) scan_only_ = true;
}

void Compiler::declare_local(Operands ops) {
  need(ops, 3);
  if (ops[2] != sc::Function) malformed("non-Function variable inside a function");
  const auto& pt = type(ops[0]);
  if (pt.kind != TypeInfo::Kind::Pointer) malformed("variable of non-pointer type");
  const auto& pointee = types_.at(pt.elem);
  if (!pointee.sized || pointee.size == 0) malformed("Function variable of unsized type");
  auto region = scratch_region(RegionKind::Private, static_cast<std::uint32_t>(pointee.size),
                               "function %" + std::to_string(ops[1]));
  if (ops.size() >= 4) {
    const auto& init = value(ops[3], nullptr);
    if (!init.is_constant) malformed("non-constant initializer");
    auto off = impl_.regions[region].scratch_offset;
    auto lanes = shape_of(init.type)->lanes;
    for (std::uint32_t c = 0; c < lanes; ++c) {
      store_le32(impl_.scratch_init.data() + off + 4 * c, impl_.initial_values[init.slot][c]);
    }
  }
  define(ops[1], IdEntry{IdKind::Pointer, ops[0], new_pointer_slot({region, 0}), true});
}

void Compiler::access_chain(Operands ops) {
  need(ops, 3);
  std::uint32_t result_type = ops[0];
  const auto& rt = type(result_type);
  if (rt.kind != TypeInfo::Kind::Pointer) malformed("access chain result is not a pointer");
  const auto& base = pointer(ops[2]);
  std::uint32_t current = types_.at(base.type).elem;

  Inst inst{OpKind::AccessChain};
  inst.a = base.slot;
  inst.term_begin = static_cast<std::uint32_t>(impl_.terms.size());
  using K = TypeInfo::Kind;

  for (std::size_t k = 3; k < ops.size(); ++k) {
    const auto& t = types_.at(current);
    Shape shape;
    const auto& index = value(ops[k], &shape);
    if (shape.cls != NumClass::Int || shape.lanes != 1) malformed("non-integer index");
    switch (t.kind) {
      case K::Struct: {
        if (!index.is_constant) malformed("struct index must be constant");
        std::uint32_t m = impl_.initial_values[index.slot][0];
        if (m >= t.members.size()) malformed("struct member index out of range");
        inst.static_offset += t.offsets[m];
        current = t.members[m];
        break;
      }
      case K::Array:
      case K::RuntimeArray:
      case K::Vector: {
        std::int64_t stride = t.kind == K::Vector ? 4 : t.stride;
        if (index.is_constant) {
          auto idx = static_cast<std::int32_t>(impl_.initial_values[index.slot][0]);
          inst.static_offset += std::int64_t{idx} * stride;
        } else {
          impl_.terms.push_back({index.slot, stride});
        }
        current = t.elem;
        break;
      }
      default:
        malformed("access chain indexes into a scalar");
    }
  }
  if (current != rt.elem) malformed("access chain result type mismatch");
  inst.term_count = static_cast<std::uint32_t>(impl_.terms.size()) - inst.term_begin;
  inst.dst = new_pointer_slot({0, 0});
  impl_.code.push_back(inst);
  define(ops[1], IdEntry{IdKind::Pointer, result_type, inst.dst, base.writable});
}

void Compiler::load(Operands ops) {
  need(ops, 3);
  const auto& ptr = pointer(ops[2]);
  std::uint32_t pointee = types_.at(ptr.type).elem;
  auto shape = shape_of(pointee);
  if (!shape) {
    reject(op::Load, "load of a composite or non-numeric value");
    define(ops[1], IdEntry{IdKind::Poison});
    return;
  }
  if (ops[0] != pointee) malformed("load result type mismatch");
  Inst inst{OpKind::Load};
  inst.lanes = static_cast<std::uint8_t>(shape->lanes);
  inst.a = ptr.slot;
  inst.dst = new_value_slot();
  impl_.code.push_back(inst);
  define(ops[1], IdEntry{IdKind::Value, ops[0], inst.dst});
}

void Compiler::store(Operands ops) {
  need(ops, 2);
  const auto& ptr = pointer(ops[0]);
  if (!ptr.writable) malformed("store through a read-only pointer");
  std::uint32_t pointee = types_.at(ptr.type).elem;
  auto shape = shape_of(pointee);
  if (!shape) {
    reject(op::Store, "store of a composite or non-numeric value");
    return;
  }
  Shape vshape;
  const auto& v = value(ops[1], &vshape);
  if (vshape.lanes != shape->lanes) malformed("store component count mismatch");
  Inst inst{OpKind::Store};
  inst.lanes = static_cast<std::uint8_t>(shape->lanes);
  inst.a = ptr.slot;
  inst.b = v.slot;
  impl_.code.push_back(inst);
}

void Compiler::binary(std::uint16_t opcode, Operands ops) {
  need(ops, 4);
  OpKind kind;
  NumClass cls = NumClass::Int;
  switch (opcode) {
    case op::IAdd: kind = OpKind::IAdd; break;
    case op::ISub: kind = OpKind::ISub; break;
    case op::IMul: kind = OpKind::IMul; break;
    case op::UDiv: kind = OpKind::UDiv; break;
    case op::SDiv: kind = OpKind::SDiv; break;
    case op::FAdd: kind = OpKind::FAdd; cls = NumClass::Float; break;
    case op::FSub: kind = OpKind::FSub; cls = NumClass::Float; break;
    case op::FMul: kind = OpKind::FMul; cls = NumClass::Float; break;
    case op::FDiv: kind = OpKind::FDiv; cls = NumClass::Float; break;
    default: malformed("unexpected opcode");
  }
  type(ops[0]);
  auto rshape = shape_of(ops[0]);
  if (!rshape || rshape->cls != cls) malformed("arithmetic result type mismatch");
  Shape sa, sb;
  const auto& a = value(ops[2], &sa);
  const auto& b = value(ops[3], &sb);
  if (sa.cls != cls || sb.cls != cls || sa.lanes != rshape->lanes || sb.lanes != rshape->lanes) {
    malformed("arithmetic operand type mismatch");
  }
  Inst inst{kind};
  inst.lanes = static_cast<std::uint8_t>(rshape->lanes);
  inst.a = a.slot;
  inst.b = b.slot;
  inst.dst = new_value_slot();
  impl_.code.push_back(inst);
  define(ops[1], IdEntry{IdKind::Value, ops[0], inst.dst});
}

void Compiler::extract(Operands ops) {
  need(ops, 4);
  Shape s;
  const auto& composite = value(ops[2], &s);
  if (ops.size() != 4) {
    reject(op::CompositeExtract, "multi-level extract");
    define(ops[1], IdEntry{IdKind::Poison});
    return;
  }
  if (s.lanes < 2 || ops[3] >= s.lanes) malformed("extract index out of range");
  auto rshape = shape_of(ops[0]);
  if (!rshape || rshape->lanes != 1) malformed("extract result is not a scalar");
  Inst inst{OpKind::Extract};
  inst.lanes = static_cast<std::uint8_t>(ops[3]);
  inst.a = composite.slot;
  inst.dst = new_value_slot();
  impl_.code.push_back(inst);
  define(ops[1], IdEntry{IdKind::Value, ops[0], inst.dst});
}

}  // namespace

std::vector<std::uint16_t> ComplianceReport::opcodes() const {
  std::vector<std::uint16_t> out;
  for (const auto& v : violations) {
    if (std::find(out.begin(), out.end(), v.opcode) == out.end()) out.push_back(v.opcode);
  }
  return out;
}

std::string ComplianceReport::summary() const {
  if (compliant()) return "Compliant";
  std::string s = "unsupported opcodes:";
  for (auto opcode : opcodes()) s += " " + std::to_string(opcode);
  return s;
}

ComplianceReport dry_run(const spirv::SpirvModule& module, std::string_view entry) {
  Compiler c(module, entry, /*collect=*/true);
  c.run();
  return c.take_report();
}

Program Program::compile(const spirv::SpirvModule& module, std::string_view entry) {
  Compiler c(module, entry, /*collect=*/false);
  c.run();
  return Program(std::make_shared<const ProgramImpl>(c.take_program()));
}

spirv::LocalSize Program::local_size() const { return impl_->local_size; }

std::span<const spirv::DescriptorSlot> Program::declared_bindings() const {
  return impl_->declared_bindings;
}

std::uint64_t Program::instructions_per_invocation() const {
  return impl_->retired_per_invocation;
}

}  // namespace girp::interp
