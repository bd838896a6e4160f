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

#ifndef GIRP_TESTS_SUPPORT_TEST_UTIL_HPP
#define GIRP_TESTS_SUPPORT_TEST_UTIL_HPP

#include <gtest/gtest.h>

#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "girp/bytes.hpp"
#include "girp/error.hpp"

namespace girp::testing {

// Asserts that `stmt` throws girp::Error with the given code.
#define EXPECT_GIRP_ERROR(stmt, expected_code)                                       \
  do {                                                                               \
    try {                                                                            \
      stmt;                                                                          \
      ADD_FAILURE() << "expected " << ::girp::error_name(expected_code) << " from " #stmt; \
    } catch (const ::girp::Error& e) {                                               \
      EXPECT_EQ(e.code(), expected_code) << e.what();                                \
    }                                                                                \
  } while (0)

inline Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline Bytes u32_buffer(const std::vector<std::uint32_t>& values) {
  Bytes out(values.size() * 4);
  std::memcpy(out.data(), values.data(), out.size());
  return out;
}

inline std::vector<std::uint32_t> as_u32(const Bytes& bytes) {
  std::vector<std::uint32_t> out(bytes.size() / 4);
  std::memcpy(out.data(), bytes.data(), out.size() * 4);
  return out;
}

inline Bytes f32_buffer(const std::vector<float>& values) {
  Bytes out(values.size() * 4);
  std::memcpy(out.data(), values.data(), out.size());
  return out;
}

inline std::vector<float> as_f32(const Bytes& bytes) {
  std::vector<float> out(bytes.size() / 4);
  std::memcpy(out.data(), bytes.data(), out.size() * 4);
  return out;
}

}  // namespace girp::testing

#endif  // GIRP_TESTS_SUPPORT_TEST_UTIL_HPP
