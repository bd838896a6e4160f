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

#ifndef GIRP_SPIRV_OPCODES_HPP
#define GIRP_SPIRV_OPCODES_HPP

#include <cstddef>
#include <cstdint>

// Numeric values from the Khronos SPIR-V registry, restricted to what
// reflection and the interpreter touch.
namespace girp::spirv {

inline constexpr std::uint32_t kMagic = 0x07230203;
inline constexpr std::size_t kHeaderWords = 5;

namespace op {
inline constexpr std::uint16_t Nop = 0;
inline constexpr std::uint16_t SourceContinued = 2;
inline constexpr std::uint16_t Source = 3;
inline constexpr std::uint16_t SourceExtension = 4;
inline constexpr std::uint16_t Name = 5;
inline constexpr std::uint16_t MemberName = 6;
inline constexpr std::uint16_t String = 7;
inline constexpr std::uint16_t Line = 8;
inline constexpr std::uint16_t Extension = 10;
inline constexpr std::uint16_t ExtInstImport = 11;
inline constexpr std::uint16_t MemoryModel = 14;
inline constexpr std::uint16_t EntryPoint = 15;
inline constexpr std::uint16_t ExecutionMode = 16;
inline constexpr std::uint16_t Capability = 17;
inline constexpr std::uint16_t TypeVoid = 19;
inline constexpr std::uint16_t TypeBool = 20;
inline constexpr std::uint16_t TypeInt = 21;
inline constexpr std::uint16_t TypeFloat = 22;
inline constexpr std::uint16_t TypeVector = 23;
inline constexpr std::uint16_t TypeArray = 28;
inline constexpr std::uint16_t TypeRuntimeArray = 29;
inline constexpr std::uint16_t TypeStruct = 30;
inline constexpr std::uint16_t TypePointer = 32;
inline constexpr std::uint16_t TypeFunction = 33;
inline constexpr std::uint16_t Constant = 43;
inline constexpr std::uint16_t ConstantComposite = 44;
inline constexpr std::uint16_t SpecConstantTrue = 48;
inline constexpr std::uint16_t SpecConstantFalse = 49;
inline constexpr std::uint16_t SpecConstant = 50;
inline constexpr std::uint16_t SpecConstantComposite = 51;
inline constexpr std::uint16_t SpecConstantOp = 52;
inline constexpr std::uint16_t Function = 54;
inline constexpr std::uint16_t FunctionParameter = 55;
inline constexpr std::uint16_t FunctionEnd = 56;
inline constexpr std::uint16_t Variable = 59;
inline constexpr std::uint16_t Load = 61;
inline constexpr std::uint16_t Store = 62;
inline constexpr std::uint16_t AccessChain = 65;
inline constexpr std::uint16_t Decorate = 71;
inline constexpr std::uint16_t MemberDecorate = 72;
inline constexpr std::uint16_t CompositeExtract = 81;
inline constexpr std::uint16_t IAdd = 128;
inline constexpr std::uint16_t FAdd = 129;
inline constexpr std::uint16_t ISub = 130;
inline constexpr std::uint16_t FSub = 131;
inline constexpr std::uint16_t IMul = 132;
inline constexpr std::uint16_t FMul = 133;
inline constexpr std::uint16_t UDiv = 134;
inline constexpr std::uint16_t SDiv = 135;
inline constexpr std::uint16_t FDiv = 136;
inline constexpr std::uint16_t Branch = 249;
inline constexpr std::uint16_t BranchConditional = 250;
inline constexpr std::uint16_t Label = 248;
inline constexpr std::uint16_t Return = 253;
inline constexpr std::uint16_t NoLine = 317;
inline constexpr std::uint16_t ModuleProcessed = 330;
}  // namespace op

namespace execution_model {
inline constexpr std::uint32_t Vertex = 0;
inline constexpr std::uint32_t Fragment = 4;
inline constexpr std::uint32_t GLCompute = 5;
}  // namespace execution_model

namespace execution_mode {
inline constexpr std::uint32_t LocalSize = 17;
}  // namespace execution_mode

namespace decoration {
inline constexpr std::uint32_t SpecId = 1;
inline constexpr std::uint32_t Block = 2;
inline constexpr std::uint32_t BufferBlock = 3;
inline constexpr std::uint32_t ArrayStride = 6;
inline constexpr std::uint32_t BuiltIn = 11;
inline constexpr std::uint32_t Binding = 33;
inline constexpr std::uint32_t DescriptorSet = 34;
inline constexpr std::uint32_t Offset = 35;
}  // namespace decoration

namespace storage_class {
inline constexpr std::uint32_t UniformConstant = 0;
inline constexpr std::uint32_t Input = 1;
inline constexpr std::uint32_t Uniform = 2;
inline constexpr std::uint32_t Output = 3;
inline constexpr std::uint32_t Workgroup = 4;
inline constexpr std::uint32_t Private = 6;
inline constexpr std::uint32_t Function = 7;
inline constexpr std::uint32_t PushConstant = 9;
inline constexpr std::uint32_t StorageBuffer = 12;
}  // namespace storage_class

namespace builtin {
inline constexpr std::uint32_t NumWorkgroups = 24;
inline constexpr std::uint32_t WorkgroupSize = 25;
inline constexpr std::uint32_t WorkgroupId = 26;
inline constexpr std::uint32_t LocalInvocationId = 27;
inline constexpr std::uint32_t GlobalInvocationId = 28;
inline constexpr std::uint32_t LocalInvocationIndex = 29;
}  // namespace builtin

}  // namespace girp::spirv

#endif  // GIRP_SPIRV_OPCODES_HPP
