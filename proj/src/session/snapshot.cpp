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

#include "girp/session/snapshot.hpp"

#include <algorithm>
#include <cstring>

#include "girp/error.hpp"

namespace girp::session {
namespace {

Digest read_digest(ByteReader& r) {
  Digest d;
  auto s = r.raw(32);
  std::memcpy(d.bytes.data(), s.data(), 32);
  return d;
}

template <typename T, typename Key>
void require_strictly_ascending(const std::vector<T>& items, Key key, const char* what) {
  for (std::size_t i = 1; i < items.size(); ++i) {
    if (!(key(items[i - 1]) < key(items[i]))) {
      throw Error(ErrorCode::MalformedPayload,
                  std::string(what) + " not in strictly ascending order at index " + std::to_string(i));
    }
  }
}

}  // namespace

std::uint64_t Snapshot::buffer_bytes() const {
  std::uint64_t total = 0;
  for (const auto& b : buffers) total += b.bytes.size();
  return total;
}

Bytes serialize(Snapshot s) {
  std::sort(s.modules.begin(), s.modules.end(),
            [](const auto& a, const auto& b) { return a.hash < b.hash; });
  std::sort(s.pipelines.begin(), s.pipelines.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  std::sort(s.buffers.begin(), s.buffers.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });

  ByteWriter w;
  w.u16(s.format_version);
  w.raw(s.session_id);
  w.u64(s.epoch);
  w.u32(static_cast<std::uint32_t>(s.modules.size()));
  for (const auto& m : s.modules) {
    w.raw(m.hash.bytes);
    w.blob32(m.bytes);
  }
  w.u32(static_cast<std::uint32_t>(s.pipelines.size()));
  for (const auto& p : s.pipelines) {
    w.u64(p.id);
    w.raw(p.module_hash.bytes);
    w.str16(p.entry);
  }
  w.u32(static_cast<std::uint32_t>(s.buffers.size()));
  for (const auto& b : s.buffers) {
    w.u64(b.id);
    w.u64(b.bytes.size());
    w.raw(b.bytes);
  }
  Digest d = sha256(w.bytes());
  w.raw(d.bytes);
  return std::move(w).take();
}

Snapshot parse_snapshot(ByteSpan bytes) {
  if (bytes.size() < 32) {
    throw Error(ErrorCode::Truncated, "snapshot of " + std::to_string(bytes.size()) + " bytes");
  }
  ByteSpan body = bytes.first(bytes.size() - 32);
  Digest stored;
  std::memcpy(stored.bytes.data(), bytes.data() + body.size(), 32);
  if (sha256(body) != stored) throw Error(ErrorCode::DigestMismatch, "snapshot digest");

  ByteReader r(body);
  Snapshot s;
  s.format_version = r.u16();
  if (s.format_version != kSnapshotFormat) {
    throw Error(ErrorCode::FormatVersionUnsupported, "format " + std::to_string(s.format_version));
  }
  auto id = r.raw(16);
  std::memcpy(s.session_id.data(), id.data(), 16);
  s.epoch = r.u64();

  std::uint32_t n = r.u32();
  for (std::uint32_t i = 0; i < n; ++i) {
    SnapshotModule m;
    m.hash = read_digest(r);
    m.bytes = r.blob32();
    if (sha256(m.bytes) != m.hash) throw Error(ErrorCode::HashMismatch, m.hash.hex());
    s.modules.push_back(std::move(m));
  }
  n = r.u32();
  for (std::uint32_t i = 0; i < n; ++i) {
    SnapshotPipeline p;
    p.id = r.u64();
    p.module_hash = read_digest(r);
    p.entry = r.str16();
    s.pipelines.push_back(std::move(p));
  }
  n = r.u32();
  for (std::uint32_t i = 0; i < n; ++i) {
    SnapshotBuffer b;
    b.id = r.u64();
    std::uint64_t size = r.u64();
    if (size > r.remaining()) {
      throw Error(ErrorCode::Truncated, "buffer " + std::to_string(b.id) + " claims " +
                                            std::to_string(size) + " bytes");
    }
    auto data = r.raw(static_cast<std::size_t>(size));
    b.bytes.assign(data.begin(), data.end());
    s.buffers.push_back(std::move(b));
  }
  if (!r.done()) {
    throw Error(ErrorCode::TrailingBytes, std::to_string(r.remaining()) + " bytes before digest");
  }

  require_strictly_ascending(s.modules, [](const auto& m) { return m.hash; }, "modules");
  require_strictly_ascending(s.pipelines, [](const auto& p) { return p.id; }, "pipelines");
  require_strictly_ascending(s.buffers, [](const auto& b) { return b.id; }, "buffers");
  for (const auto& p : s.pipelines) {
    bool found = std::any_of(s.modules.begin(), s.modules.end(),
                             [&](const auto& m) { return m.hash == p.module_hash; });
    if (!found) {
      throw Error(ErrorCode::MalformedPayload,
                  "pipeline " + std::to_string(p.id) + " references missing module " + p.module_hash.hex());
    }
  }
  return s;
}

}  // namespace girp::session
