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

// Generated by tools/embed_fixtures.py. Do not edit.

#include "girp/fixtures.hpp"

namespace girp::fixtures::data {

extern const std::uint32_t k_multiply[] = {
    0x07230203, 0x00010000, 0x00080008, 0x00000027, 0x00000000, 0x00020011,
    0x00000001, 0x0006000b, 0x00000001, 0x4c534c47, 0x6474732e, 0x3035342e,
    0x00000000, 0x0003000e, 0x00000000, 0x00000001, 0x0006000f, 0x00000005,
    0x00000004, 0x6e69616d, 0x00000000, 0x0000000b, 0x00060010, 0x00000004,
    0x00000011, 0x00000040, 0x00000001, 0x00000001, 0x00030003, 0x00000002,
    0x000001c2, 0x00040005, 0x00000004, 0x6e69616d, 0x00000000, 0x00030005,
    0x00000008, 0x00000069, 0x00080005, 0x0000000b, 0x475f6c67, 0x61626f6c,
    0x766e496c, 0x7461636f, 0x496e6f69, 0x00000044, 0x00040005, 0x00000011,
    0x61746144, 0x00000000, 0x00040006, 0x00000011, 0x00000000, 0x00000076,
    0x00030005, 0x00000013, 0x00000000, 0x00030005, 0x00000018, 0x0073684c,
    0x00040006, 0x00000018, 0x00000000, 0x00000061, 0x00030005, 0x0000001a,
    0x00000000, 0x00040047, 0x0000000b, 0x0000000b, 0x0000001c, 0x00040047,
    0x00000010, 0x00000006, 0x00000004, 0x00050048, 0x00000011, 0x00000000,
    0x00000023, 0x00000000, 0x00030047, 0x00000011, 0x00000003, 0x00040047,
    0x00000013, 0x00000022, 0x00000000, 0x00040047, 0x00000013, 0x00000021,
    0x00000001, 0x00040047, 0x00000017, 0x00000006, 0x00000004, 0x00040048,
    0x00000018, 0x00000000, 0x00000018, 0x00050048, 0x00000018, 0x00000000,
    0x00000023, 0x00000000, 0x00030047, 0x00000018, 0x00000003, 0x00040047,
    0x0000001a, 0x00000022, 0x00000000, 0x00040047, 0x0000001a, 0x00000021,
    0x00000000, 0x00040047, 0x00000026, 0x0000000b, 0x00000019, 0x00020013,
    0x00000002, 0x00030021, 0x00000003, 0x00000002, 0x00040015, 0x00000006,
    0x00000020, 0x00000000, 0x00040020, 0x00000007, 0x00000007, 0x00000006,
    0x00040017, 0x00000009, 0x00000006, 0x00000003, 0x00040020, 0x0000000a,
    0x00000001, 0x00000009, 0x0004003b, 0x0000000a, 0x0000000b, 0x00000001,
    0x0004002b, 0x00000006, 0x0000000c, 0x00000000, 0x00040020, 0x0000000d,
    0x00000001, 0x00000006, 0x0003001d, 0x00000010, 0x00000006, 0x0003001e,
    0x00000011, 0x00000010, 0x00040020, 0x00000012, 0x00000002, 0x00000011,
    0x0004003b, 0x00000012, 0x00000013, 0x00000002, 0x00040015, 0x00000014,
    0x00000020, 0x00000001, 0x0004002b, 0x00000014, 0x00000015, 0x00000000,
    0x0003001d, 0x00000017, 0x00000006, 0x0003001e, 0x00000018, 0x00000017,
    0x00040020, 0x00000019, 0x00000002, 0x00000018, 0x0004003b, 0x00000019,
    0x0000001a, 0x00000002, 0x00040020, 0x0000001c, 0x00000002, 0x00000006,
    0x0004002b, 0x00000006, 0x00000024, 0x00000040, 0x0004002b, 0x00000006,
    0x00000025, 0x00000001, 0x0006002c, 0x00000009, 0x00000026, 0x00000024,
    0x00000025, 0x00000025, 0x00050036, 0x00000002, 0x00000004, 0x00000000,
    0x00000003, 0x000200f8, 0x00000005, 0x0004003b, 0x00000007, 0x00000008,
    0x00000007, 0x00050041, 0x0000000d, 0x0000000e, 0x0000000b, 0x0000000c,
    0x0004003d, 0x00000006, 0x0000000f, 0x0000000e, 0x0003003e, 0x00000008,
    0x0000000f, 0x0004003d, 0x00000006, 0x00000016, 0x00000008, 0x0004003d,
    0x00000006, 0x0000001b, 0x00000008, 0x00060041, 0x0000001c, 0x0000001d,
    0x0000001a, 0x00000015, 0x0000001b, 0x0004003d, 0x00000006, 0x0000001e,
    0x0000001d, 0x0004003d, 0x00000006, 0x0000001f, 0x00000008, 0x00060041,
    0x0000001c, 0x00000020, 0x00000013, 0x00000015, 0x0000001f, 0x0004003d,
    0x00000006, 0x00000021, 0x00000020, 0x00050084, 0x00000006, 0x00000022,
    0x0000001e, 0x00000021, 0x00060041, 0x0000001c, 0x00000023, 0x00000013,
    0x00000015, 0x00000016, 0x0003003e, 0x00000023, 0x00000022, 0x000100fd,
    0x00010038,
};
extern const std::size_t k_multiply_words = 277;

extern const std::uint32_t k_multiply_sb13[] = {
    0x07230203, 0x00010300, 0x00080008, 0x00000027, 0x00000000, 0x00020011,
    0x00000001, 0x0006000b, 0x00000001, 0x4c534c47, 0x6474732e, 0x3035342e,
    0x00000000, 0x0003000e, 0x00000000, 0x00000001, 0x0006000f, 0x00000005,
    0x00000004, 0x6e69616d, 0x00000000, 0x0000000b, 0x00060010, 0x00000004,
    0x00000011, 0x00000040, 0x00000001, 0x00000001, 0x00030003, 0x00000002,
    0x000001c2, 0x00040005, 0x00000004, 0x6e69616d, 0x00000000, 0x00030005,
    0x00000008, 0x00000069, 0x00080005, 0x0000000b, 0x475f6c67, 0x61626f6c,
    0x766e496c, 0x7461636f, 0x496e6f69, 0x00000044, 0x00040005, 0x00000011,
    0x61746144, 0x00000000, 0x00040006, 0x00000011, 0x00000000, 0x00000076,
    0x00030005, 0x00000013, 0x00000000, 0x00030005, 0x00000018, 0x0073684c,
    0x00040006, 0x00000018, 0x00000000, 0x00000061, 0x00030005, 0x0000001a,
    0x00000000, 0x00040047, 0x0000000b, 0x0000000b, 0x0000001c, 0x00040047,
    0x00000010, 0x00000006, 0x00000004, 0x00050048, 0x00000011, 0x00000000,
    0x00000023, 0x00000000, 0x00030047, 0x00000011, 0x00000002, 0x00040047,
    0x00000013, 0x00000022, 0x00000000, 0x00040047, 0x00000013, 0x00000021,
    0x00000001, 0x00040047, 0x00000017, 0x00000006, 0x00000004, 0x00040048,
    0x00000018, 0x00000000, 0x00000018, 0x00050048, 0x00000018, 0x00000000,
    0x00000023, 0x00000000, 0x00030047, 0x00000018, 0x00000002, 0x00040047,
    0x0000001a, 0x00000022, 0x00000000, 0x00040047, 0x0000001a, 0x00000021,
    0x00000000, 0x00040047, 0x00000026, 0x0000000b, 0x00000019, 0x00020013,
    0x00000002, 0x00030021, 0x00000003, 0x00000002, 0x00040015, 0x00000006,
    0x00000020, 0x00000000, 0x00040020, 0x00000007, 0x00000007, 0x00000006,
    0x00040017, 0x00000009, 0x00000006, 0x00000003, 0x00040020, 0x0000000a,
    0x00000001, 0x00000009, 0x0004003b, 0x0000000a, 0x0000000b, 0x00000001,
    0x0004002b, 0x00000006, 0x0000000c, 0x00000000, 0x00040020, 0x0000000d,
    0x00000001, 0x00000006, 0x0003001d, 0x00000010, 0x00000006, 0x0003001e,
    0x00000011, 0x00000010, 0x00040020, 0x00000012, 0x0000000c, 0x00000011,
    0x0004003b, 0x00000012, 0x00000013, 0x0000000c, 0x00040015, 0x00000014,
    0x00000020, 0x00000001, 0x0004002b, 0x00000014, 0x00000015, 0x00000000,
    0x0003001d, 0x00000017, 0x00000006, 0x0003001e, 0x00000018, 0x00000017,
    0x00040020, 0x00000019, 0x0000000c, 0x00000018, 0x0004003b, 0x00000019,
    0x0000001a, 0x0000000c, 0x00040020, 0x0000001c, 0x0000000c, 0x00000006,
    0x0004002b, 0x00000006, 0x00000024, 0x00000040, 0x0004002b, 0x00000006,
    0x00000025, 0x00000001, 0x0006002c, 0x00000009, 0x00000026, 0x00000024,
    0x00000025, 0x00000025, 0x00050036, 0x00000002, 0x00000004, 0x00000000,
    0x00000003, 0x000200f8, 0x00000005, 0x0004003b, 0x00000007, 0x00000008,
    0x00000007, 0x00050041, 0x0000000d, 0x0000000e, 0x0000000b, 0x0000000c,
    0x0004003d, 0x00000006, 0x0000000f, 0x0000000e, 0x0003003e, 0x00000008,
    0x0000000f, 0x0004003d, 0x00000006, 0x00000016, 0x00000008, 0x0004003d,
    0x00000006, 0x0000001b, 0x00000008, 0x00060041, 0x0000001c, 0x0000001d,
    0x0000001a, 0x00000015, 0x0000001b, 0x0004003d, 0x00000006, 0x0000001e,
    0x0000001d, 0x0004003d, 0x00000006, 0x0000001f, 0x00000008, 0x00060041,
    0x0000001c, 0x00000020, 0x00000013, 0x00000015, 0x0000001f, 0x0004003d,
    0x00000006, 0x00000021, 0x00000020, 0x00050084, 0x00000006, 0x00000022,
    0x0000001e, 0x00000021, 0x00060041, 0x0000001c, 0x00000023, 0x00000013,
    0x00000015, 0x00000016, 0x0003003e, 0x00000023, 0x00000022, 0x000100fd,
    0x00010038,
};
extern const std::size_t k_multiply_sb13_words = 277;

extern const std::uint32_t k_saxpy[] = {
    0x07230203, 0x00010000, 0x00080008, 0x0000002a, 0x00000000, 0x00020011,
    0x00000001, 0x0006000b, 0x00000001, 0x4c534c47, 0x6474732e, 0x3035342e,
    0x00000000, 0x0003000e, 0x00000000, 0x00000001, 0x0006000f, 0x00000005,
    0x00000004, 0x6e69616d, 0x00000000, 0x0000000b, 0x00060010, 0x00000004,
    0x00000011, 0x00000040, 0x00000001, 0x00000001, 0x00030003, 0x00000002,
    0x000001c2, 0x00040005, 0x00000004, 0x6e69616d, 0x00000000, 0x00030005,
    0x00000008, 0x00000069, 0x00080005, 0x0000000b, 0x475f6c67, 0x61626f6c,
    0x766e496c, 0x7461636f, 0x496e6f69, 0x00000044, 0x00030005, 0x00000012,
    0x00000059, 0x00040006, 0x00000012, 0x00000000, 0x00000079, 0x00030005,
    0x00000014, 0x00000000, 0x00030005, 0x0000001a, 0x00000058, 0x00040006,
    0x0000001a, 0x00000000, 0x00000078, 0x00030005, 0x0000001c, 0x00000000,
    0x00040047, 0x0000000b, 0x0000000b, 0x0000001c, 0x00040047, 0x00000011,
    0x00000006, 0x00000004, 0x00050048, 0x00000012, 0x00000000, 0x00000023,
    0x00000000, 0x00030047, 0x00000012, 0x00000003, 0x00040047, 0x00000014,
    0x00000022, 0x00000000, 0x00040047, 0x00000014, 0x00000021, 0x00000001,
    0x00040047, 0x00000019, 0x00000006, 0x00000004, 0x00040048, 0x0000001a,
    0x00000000, 0x00000018, 0x00050048, 0x0000001a, 0x00000000, 0x00000023,
    0x00000000, 0x00030047, 0x0000001a, 0x00000003, 0x00040047, 0x0000001c,
    0x00000022, 0x00000000, 0x00040047, 0x0000001c, 0x00000021, 0x00000000,
    0x00040047, 0x00000029, 0x0000000b, 0x00000019, 0x00020013, 0x00000002,
    0x00030021, 0x00000003, 0x00000002, 0x00040015, 0x00000006, 0x00000020,
    0x00000000, 0x00040020, 0x00000007, 0x00000007, 0x00000006, 0x00040017,
    0x00000009, 0x00000006, 0x00000003, 0x00040020, 0x0000000a, 0x00000001,
    0x00000009, 0x0004003b, 0x0000000a, 0x0000000b, 0x00000001, 0x0004002b,
    0x00000006, 0x0000000c, 0x00000000, 0x00040020, 0x0000000d, 0x00000001,
    0x00000006, 0x00030016, 0x00000010, 0x00000020, 0x0003001d, 0x00000011,
    0x00000010, 0x0003001e, 0x00000012, 0x00000011, 0x00040020, 0x00000013,
    0x00000002, 0x00000012, 0x0004003b, 0x00000013, 0x00000014, 0x00000002,
    0x00040015, 0x00000015, 0x00000020, 0x00000001, 0x0004002b, 0x00000015,
    0x00000016, 0x00000000, 0x0004002b, 0x00000010, 0x00000018, 0x40200000,
    0x0003001d, 0x00000019, 0x00000010, 0x0003001e, 0x0000001a, 0x00000019,
    0x00040020, 0x0000001b, 0x00000002, 0x0000001a, 0x0004003b, 0x0000001b,
    0x0000001c, 0x00000002, 0x00040020, 0x0000001e, 0x00000002, 0x00000010,
    0x0004002b, 0x00000006, 0x00000027, 0x00000040, 0x0004002b, 0x00000006,
    0x00000028, 0x00000001, 0x0006002c, 0x00000009, 0x00000029, 0x00000027,
    0x00000028, 0x00000028, 0x00050036, 0x00000002, 0x00000004, 0x00000000,
    0x00000003, 0x000200f8, 0x00000005, 0x0004003b, 0x00000007, 0x00000008,
    0x00000007, 0x00050041, 0x0000000d, 0x0000000e, 0x0000000b, 0x0000000c,
    0x0004003d, 0x00000006, 0x0000000f, 0x0000000e, 0x0003003e, 0x00000008,
    0x0000000f, 0x0004003d, 0x00000006, 0x00000017, 0x00000008, 0x0004003d,
    0x00000006, 0x0000001d, 0x00000008, 0x00060041, 0x0000001e, 0x0000001f,
    0x0000001c, 0x00000016, 0x0000001d, 0x0004003d, 0x00000010, 0x00000020,
    0x0000001f, 0x00050085, 0x00000010, 0x00000021, 0x00000018, 0x00000020,
    0x0004003d, 0x00000006, 0x00000022, 0x00000008, 0x00060041, 0x0000001e,
    0x00000023, 0x00000014, 0x00000016, 0x00000022, 0x0004003d, 0x00000010,
    0x00000024, 0x00000023, 0x00050081, 0x00000010, 0x00000025, 0x00000021,
    0x00000024, 0x00060041, 0x0000001e, 0x00000026, 0x00000014, 0x00000016,
    0x00000017, 0x0003003e, 0x00000026, 0x00000025, 0x000100fd, 0x00010038,
};
extern const std::size_t k_saxpy_words = 288;

extern const std::uint32_t k_fill[] = {
    0x07230203, 0x00010000, 0x00080008, 0x0000001e, 0x00000000, 0x00020011,
    0x00000001, 0x0006000b, 0x00000001, 0x4c534c47, 0x6474732e, 0x3035342e,
    0x00000000, 0x0003000e, 0x00000000, 0x00000001, 0x0006000f, 0x00000005,
    0x00000004, 0x6e69616d, 0x00000000, 0x0000000f, 0x00060010, 0x00000004,
    0x00000011, 0x00000040, 0x00000001, 0x00000001, 0x00030003, 0x00000002,
    0x000001c2, 0x00040005, 0x00000004, 0x6e69616d, 0x00000000, 0x00030005,
    0x00000008, 0x0074754f, 0x00040006, 0x00000008, 0x00000000, 0x00747364,
    0x00030005, 0x0000000a, 0x00000000, 0x00080005, 0x0000000f, 0x475f6c67,
    0x61626f6c, 0x766e496c, 0x7461636f, 0x496e6f69, 0x00000044, 0x00040005,
    0x00000014, 0x61726150, 0x0000736d, 0x00050006, 0x00000014, 0x00000000,
    0x756c6176, 0x00000065, 0x00030005, 0x00000016, 0x00000000, 0x00040047,
    0x00000007, 0x00000006, 0x00000004, 0x00040048, 0x00000008, 0x00000000,
    0x00000019, 0x00050048, 0x00000008, 0x00000000, 0x00000023, 0x00000000,
    0x00030047, 0x00000008, 0x00000003, 0x00040047, 0x0000000a, 0x00000022,
    0x00000000, 0x00040047, 0x0000000a, 0x00000021, 0x00000001, 0x00040047,
    0x0000000f, 0x0000000b, 0x0000001c, 0x00040048, 0x00000014, 0x00000000,
    0x00000018, 0x00050048, 0x00000014, 0x00000000, 0x00000023, 0x00000000,
    0x00030047, 0x00000014, 0x00000003, 0x00040047, 0x00000016, 0x00000022,
    0x00000000, 0x00040047, 0x00000016, 0x00000021, 0x00000000, 0x00040047,
    0x0000001d, 0x0000000b, 0x00000019, 0x00020013, 0x00000002, 0x00030021,
    0x00000003, 0x00000002, 0x00040015, 0x00000006, 0x00000020, 0x00000000,
    0x0003001d, 0x00000007, 0x00000006, 0x0003001e, 0x00000008, 0x00000007,
    0x00040020, 0x00000009, 0x00000002, 0x00000008, 0x0004003b, 0x00000009,
    0x0000000a, 0x00000002, 0x00040015, 0x0000000b, 0x00000020, 0x00000001,
    0x0004002b, 0x0000000b, 0x0000000c, 0x00000000, 0x00040017, 0x0000000d,
    0x00000006, 0x00000003, 0x00040020, 0x0000000e, 0x00000001, 0x0000000d,
    0x0004003b, 0x0000000e, 0x0000000f, 0x00000001, 0x0004002b, 0x00000006,
    0x00000010, 0x00000000, 0x00040020, 0x00000011, 0x00000001, 0x00000006,
    0x0003001e, 0x00000014, 0x00000006, 0x00040020, 0x00000015, 0x00000002,
    0x00000014, 0x0004003b, 0x00000015, 0x00000016, 0x00000002, 0x00040020,
    0x00000017, 0x00000002, 0x00000006, 0x0004002b, 0x00000006, 0x0000001b,
    0x00000040, 0x0004002b, 0x00000006, 0x0000001c, 0x00000001, 0x0006002c,
    0x0000000d, 0x0000001d, 0x0000001b, 0x0000001c, 0x0000001c, 0x00050036,
    0x00000002, 0x00000004, 0x00000000, 0x00000003, 0x000200f8, 0x00000005,
    0x00050041, 0x00000011, 0x00000012, 0x0000000f, 0x00000010, 0x0004003d,
    0x00000006, 0x00000013, 0x00000012, 0x00050041, 0x00000017, 0x00000018,
    0x00000016, 0x0000000c, 0x0004003d, 0x00000006, 0x00000019, 0x00000018,
    0x00060041, 0x00000017, 0x0000001a, 0x0000000a, 0x0000000c, 0x00000013,
    0x0003003e, 0x0000001a, 0x00000019, 0x000100fd, 0x00010038,
};
extern const std::size_t k_fill_words = 233;

extern const std::uint32_t k_frame[] = {
    0x07230203, 0x00010000, 0x00080008, 0x00000032, 0x00000000, 0x00020011,
    0x00000001, 0x0006000b, 0x00000001, 0x4c534c47, 0x6474732e, 0x3035342e,
    0x00000000, 0x0003000e, 0x00000000, 0x00000001, 0x0006000f, 0x00000005,
    0x00000004, 0x6e69616d, 0x00000000, 0x0000000b, 0x00060010, 0x00000004,
    0x00000011, 0x00000008, 0x00000008, 0x00000001, 0x00030003, 0x00000002,
    0x000001c2, 0x00040005, 0x00000004, 0x6e69616d, 0x00000000, 0x00030005,
    0x00000008, 0x00000078, 0x00080005, 0x0000000b, 0x475f6c67, 0x61626f6c,
    0x766e496c, 0x7461636f, 0x496e6f69, 0x00000044, 0x00030005, 0x00000010,
    0x00000079, 0x00050005, 0x00000015, 0x6d617246, 0x66756265, 0x00726566,
    0x00050006, 0x00000015, 0x00000000, 0x65786970, 0x0000736c, 0x00030005,
    0x00000017, 0x00000000, 0x00040005, 0x0000001b, 0x61726150, 0x0000736d,
    0x00050006, 0x0000001b, 0x00000000, 0x74646977, 0x00000068, 0x00050006,
    0x0000001b, 0x00000001, 0x6d617266, 0x00000065, 0x00030005, 0x0000001d,
    0x00000000, 0x00040047, 0x0000000b, 0x0000000b, 0x0000001c, 0x00040047,
    0x00000014, 0x00000006, 0x00000004, 0x00040048, 0x00000015, 0x00000000,
    0x00000019, 0x00050048, 0x00000015, 0x00000000, 0x00000023, 0x00000000,
    0x00030047, 0x00000015, 0x00000003, 0x00040047, 0x00000017, 0x00000022,
    0x00000000, 0x00040047, 0x00000017, 0x00000021, 0x00000001, 0x00040048,
    0x0000001b, 0x00000000, 0x00000018, 0x00050048, 0x0000001b, 0x00000000,
    0x00000023, 0x00000000, 0x00040048, 0x0000001b, 0x00000001, 0x00000018,
    0x00050048, 0x0000001b, 0x00000001, 0x00000023, 0x00000004, 0x00030047,
    0x0000001b, 0x00000003, 0x00040047, 0x0000001d, 0x00000022, 0x00000000,
    0x00040047, 0x0000001d, 0x00000021, 0x00000000, 0x00040047, 0x00000031,
    0x0000000b, 0x00000019, 0x00020013, 0x00000002, 0x00030021, 0x00000003,
    0x00000002, 0x00040015, 0x00000006, 0x00000020, 0x00000000, 0x00040020,
    0x00000007, 0x00000007, 0x00000006, 0x00040017, 0x00000009, 0x00000006,
    0x00000003, 0x00040020, 0x0000000a, 0x00000001, 0x00000009, 0x0004003b,
    0x0000000a, 0x0000000b, 0x00000001, 0x0004002b, 0x00000006, 0x0000000c,
    0x00000000, 0x00040020, 0x0000000d, 0x00000001, 0x00000006, 0x0004002b,
    0x00000006, 0x00000011, 0x00000001, 0x0003001d, 0x00000014, 0x00000006,
    0x0003001e, 0x00000015, 0x00000014, 0x00040020, 0x00000016, 0x00000002,
    0x00000015, 0x0004003b, 0x00000016, 0x00000017, 0x00000002, 0x00040015,
    0x00000018, 0x00000020, 0x00000001, 0x0004002b, 0x00000018, 0x00000019,
    0x00000000, 0x0004001e, 0x0000001b, 0x00000006, 0x00000006, 0x00040020,
    0x0000001c, 0x00000002, 0x0000001b, 0x0004003b, 0x0000001c, 0x0000001d,
    0x00000002, 0x00040020, 0x0000001e, 0x00000002, 0x00000006, 0x0004002b,
    0x00000018, 0x00000024, 0x00000001, 0x0004002b, 0x00000006, 0x00000027,
    0x01000000, 0x0004002b, 0x00000006, 0x0000002a, 0x00000100, 0x0004002b,
    0x00000006, 0x00000030, 0x00000008, 0x0006002c, 0x00000009, 0x00000031,
    0x00000030, 0x00000030, 0x00000011, 0x00050036, 0x00000002, 0x00000004,
    0x00000000, 0x00000003, 0x000200f8, 0x00000005, 0x0004003b, 0x00000007,
    0x00000008, 0x00000007, 0x0004003b, 0x00000007, 0x00000010, 0x00000007,
    0x00050041, 0x0000000d, 0x0000000e, 0x0000000b, 0x0000000c, 0x0004003d,
    0x00000006, 0x0000000f, 0x0000000e, 0x0003003e, 0x00000008, 0x0000000f,
    0x00050041, 0x0000000d, 0x00000012, 0x0000000b, 0x00000011, 0x0004003d,
    0x00000006, 0x00000013, 0x00000012, 0x0003003e, 0x00000010, 0x00000013,
    0x0004003d, 0x00000006, 0x0000001a, 0x00000010, 0x00050041, 0x0000001e,
    0x0000001f, 0x0000001d, 0x00000019, 0x0004003d, 0x00000006, 0x00000020,
    0x0000001f, 0x00050084, 0x00000006, 0x00000021, 0x0000001a, 0x00000020,
    0x0004003d, 0x00000006, 0x00000022, 0x00000008, 0x00050080, 0x00000006,
    0x00000023, 0x00000021, 0x00000022, 0x00050041, 0x0000001e, 0x00000025,
    0x0000001d, 0x00000024, 0x0004003d, 0x00000006, 0x00000026, 0x00000025,
    0x00050084, 0x00000006, 0x00000028, 0x00000026, 0x00000027, 0x0004003d,
    0x00000006, 0x00000029, 0x00000010, 0x00050084, 0x00000006, 0x0000002b,
    0x00000029, 0x0000002a, 0x00050080, 0x00000006, 0x0000002c, 0x00000028,
    0x0000002b, 0x0004003d, 0x00000006, 0x0000002d, 0x00000008, 0x00050080,
    0x00000006, 0x0000002e, 0x0000002c, 0x0000002d, 0x00060041, 0x0000001e,
    0x0000002f, 0x00000017, 0x00000019, 0x00000023, 0x0003003e, 0x0000002f,
    0x0000002e, 0x000100fd, 0x00010038,
};
extern const std::size_t k_frame_words = 351;

extern const std::uint32_t k_branch[] = {
    0x07230203, 0x00010000, 0x00080008, 0x00000023, 0x00000000, 0x00020011,
    0x00000001, 0x0006000b, 0x00000001, 0x4c534c47, 0x6474732e, 0x3035342e,
    0x00000000, 0x0003000e, 0x00000000, 0x00000001, 0x0006000f, 0x00000005,
    0x00000004, 0x6e69616d, 0x00000000, 0x0000000b, 0x00060010, 0x00000004,
    0x00000011, 0x00000040, 0x00000001, 0x00000001, 0x00030003, 0x00000002,
    0x000001c2, 0x00040005, 0x00000004, 0x6e69616d, 0x00000000, 0x00030005,
    0x00000008, 0x00000069, 0x00080005, 0x0000000b, 0x475f6c67, 0x61626f6c,
    0x766e496c, 0x7461636f, 0x496e6f69, 0x00000044, 0x00040005, 0x00000017,
    0x61746144, 0x00000000, 0x00040006, 0x00000017, 0x00000000, 0x00000076,
    0x00030005, 0x00000019, 0x00000000, 0x00040047, 0x0000000b, 0x0000000b,
    0x0000001c, 0x00040047, 0x00000016, 0x00000006, 0x00000004, 0x00050048,
    0x00000017, 0x00000000, 0x00000023, 0x00000000, 0x00030047, 0x00000017,
    0x00000003, 0x00040047, 0x00000019, 0x00000022, 0x00000000, 0x00040047,
    0x00000019, 0x00000021, 0x00000000, 0x00040047, 0x00000022, 0x0000000b,
    0x00000019, 0x00020013, 0x00000002, 0x00030021, 0x00000003, 0x00000002,
    0x00040015, 0x00000006, 0x00000020, 0x00000000, 0x00040020, 0x00000007,
    0x00000007, 0x00000006, 0x00040017, 0x00000009, 0x00000006, 0x00000003,
    0x00040020, 0x0000000a, 0x00000001, 0x00000009, 0x0004003b, 0x0000000a,
    0x0000000b, 0x00000001, 0x0004002b, 0x00000006, 0x0000000c, 0x00000000,
    0x00040020, 0x0000000d, 0x00000001, 0x00000006, 0x0004002b, 0x00000006,
    0x00000011, 0x00000020, 0x00020014, 0x00000012, 0x0003001d, 0x00000016,
    0x00000006, 0x0003001e, 0x00000017, 0x00000016, 0x00040020, 0x00000018,
    0x00000002, 0x00000017, 0x0004003b, 0x00000018, 0x00000019, 0x00000002,
    0x00040015, 0x0000001a, 0x00000020, 0x00000001, 0x0004002b, 0x0000001a,
    0x0000001b, 0x00000000, 0x00040020, 0x0000001e, 0x00000002, 0x00000006,
    0x0004002b, 0x00000006, 0x00000020, 0x00000040, 0x0004002b, 0x00000006,
    0x00000021, 0x00000001, 0x0006002c, 0x00000009, 0x00000022, 0x00000020,
    0x00000021, 0x00000021, 0x00050036, 0x00000002, 0x00000004, 0x00000000,
    0x00000003, 0x000200f8, 0x00000005, 0x0004003b, 0x00000007, 0x00000008,
    0x00000007, 0x00050041, 0x0000000d, 0x0000000e, 0x0000000b, 0x0000000c,
    0x0004003d, 0x00000006, 0x0000000f, 0x0000000e, 0x0003003e, 0x00000008,
    0x0000000f, 0x0004003d, 0x00000006, 0x00000010, 0x00000008, 0x000500b0,
    0x00000012, 0x00000013, 0x00000010, 0x00000011, 0x000300f7, 0x00000015,
    0x00000000, 0x000400fa, 0x00000013, 0x00000014, 0x00000015, 0x000200f8,
    0x00000014, 0x0004003d, 0x00000006, 0x0000001c, 0x00000008, 0x0004003d,
    0x00000006, 0x0000001d, 0x00000008, 0x00060041, 0x0000001e, 0x0000001f,
    0x00000019, 0x0000001b, 0x0000001c, 0x0003003e, 0x0000001f, 0x0000001d,
    0x000200f9, 0x00000015, 0x000200f8, 0x00000015, 0x000100fd, 0x00010038,
};
extern const std::size_t k_branch_words = 228;

}  // namespace girp::fixtures::data
