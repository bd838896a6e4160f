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

#ifndef GIRP_BYTES_HPP
#define GIRP_BYTES_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace girp {

using Bytes = std::vector<std::uint8_t>;
using ByteSpan = std::span<const std::uint8_t>;

// Little-endian append-only encoder.
class ByteWriter {
 public:
  ByteWriter() = default;

  void u8(std::uint8_t v) { buf_.push_back(v); }
  void u16(std::uint16_t v);
  void u32(std::uint32_t v);
  void u64(std::uint64_t v);
  void raw(ByteSpan data);

  /// u16 length prefix followed by the string bytes.
  void str16(std::string_view s);
  /// u32 length prefix followed by the bytes.
  void blob32(ByteSpan data);

  std::size_t size() const { return buf_.size(); }
  const Bytes& bytes() const& { return buf_; }
  Bytes take() && { return std::move(buf_); }

 private:
  Bytes buf_;
};

// Little-endian cursor over a borrowed span. Every accessor throws
// Error(Truncated) instead of reading past the end.
class ByteReader {
 public:
  explicit ByteReader(ByteSpan data) : data_(data) {}

  std::uint8_t u8();
  std::uint16_t u16();
  std::uint32_t u32();
  std::uint64_t u64();
  ByteSpan raw(std::size_t n);
  std::string str16();
  Bytes blob32();

  std::size_t remaining() const { return data_.size() - pos_; }
  std::size_t position() const { return pos_; }
  bool done() const { return pos_ == data_.size(); }

 private:
  ByteSpan take(std::size_t n);

  ByteSpan data_;
  std::size_t pos_ = 0;
};

std::uint32_t load_le32(const std::uint8_t* p);
void store_le32(std::uint8_t* p, std::uint32_t v);

std::string to_hex(ByteSpan data);
/// Throws Error(InvalidArgument) on odd length or a non-hex digit.
Bytes from_hex(std::string_view hex);

}  // namespace girp

#endif  // GIRP_BYTES_HPP
