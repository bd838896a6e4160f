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

#ifndef GIRP_DIGEST_HPP
#define GIRP_DIGEST_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "girp/bytes.hpp"

namespace girp {

// SHA-256 value. Ordered bytewise so maps keyed by Digest iterate in
// ascending hash order.
struct Digest {
  std::array<std::uint8_t, 32> bytes{};

  std::string hex() const;
  static Digest from_hex(std::string_view hex);

  auto operator<=>(const Digest&) const = default;
};

Digest sha256(ByteSpan data);

// Incremental form for digests over data assembled piecewise.
class Sha256 {
 public:
  Sha256();
  ~Sha256();
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;

  void update(ByteSpan data);
  Digest finish();

 private:
  void* ctx_;
};

}  // namespace girp

#endif  // GIRP_DIGEST_HPP
