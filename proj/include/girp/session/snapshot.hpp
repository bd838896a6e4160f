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

#ifndef GIRP_SESSION_SNAPSHOT_HPP
#define GIRP_SESSION_SNAPSHOT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "girp/bytes.hpp"
#include "girp/digest.hpp"
#include "girp/wire/message.hpp"

// Migration unit. Layout, little-endian:
//   u16 format_version
//   16  session_id
//   u64 epoch
//   u32 module count,   then per module:   32 hash, u32 len, bytes
//   u32 pipeline count, then per pipeline: u64 id, 32 module hash, u16 len, entry
//   u32 buffer count,   then per buffer:   u64 id, u64 size, size bytes
//   32  SHA-256 over everything above
// Modules are ordered by hash, pipelines and buffers by id, so equal state
// always serializes to equal bytes.
namespace girp::session {

inline constexpr std::uint16_t kSnapshotFormat = 1;

struct SnapshotModule {
  Digest hash;
  Bytes bytes;
  bool operator==(const SnapshotModule&) const = default;
};

struct SnapshotPipeline {
  std::uint64_t id = 0;
  Digest module_hash;
  std::string entry;
  bool operator==(const SnapshotPipeline&) const = default;
};

struct SnapshotBuffer {
  std::uint64_t id = 0;
  Bytes bytes;
  bool operator==(const SnapshotBuffer&) const = default;
};

struct Snapshot {
  std::uint16_t format_version = kSnapshotFormat;
  wire::SessionId session_id{};
  std::uint64_t epoch = 0;
  std::vector<SnapshotModule> modules;
  std::vector<SnapshotPipeline> pipelines;
  std::vector<SnapshotBuffer> buffers;

  std::uint64_t buffer_bytes() const;
  bool operator==(const Snapshot&) const = default;
};

/// Canonicalizes ordering, then writes the layout above.
Bytes serialize(Snapshot snapshot);

/// Checks the digest before anything else, then the format version.
/// Errors: Truncated, DigestMismatch, FormatVersionUnsupported,
/// TrailingBytes, HashMismatch (module bytes vs. hash), MalformedPayload
/// (non-canonical order, duplicate ids, dangling pipeline module).
Snapshot parse_snapshot(ByteSpan bytes);

}  // namespace girp::session

#endif  // GIRP_SESSION_SNAPSHOT_HPP
