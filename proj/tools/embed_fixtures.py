#!/usr/bin/env python3
# Copyright 2026 The girp Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates src/fixtures/kernels_data.cpp from fixtures/kernels/*.spv."""
import pathlib
import struct

ROOT = pathlib.Path(__file__).resolve().parent.parent
LICENSE_LINES = [
    '// Copyright 2026 The girp Authors. All Rights Reserved.',
    '//',
    '// Licensed under the Apache License, Version 2.0 (the "License");',
    '// you may not use this file except in compliance with the License.',
    '// You may obtain a copy of the License at',
    '//',
    '//    http://www.apache.org/licenses/LICENSE-2.0',
    '//',
    '// Unless required by applicable law or agreed to in writing, software',
    '// distributed under the License is distributed on an "AS IS" BASIS,',
    '// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.',
    '// See the License for the specific language governing permissions and',
    '// limitations under the License.',
]
KERNELS = ["multiply", "multiply_sb13", "saxpy", "fill", "frame", "branch"]

out = LICENSE_LINES + ["", "// Generated by tools/embed_fixtures.py. Do not edit.", "",
       '#include "girp/fixtures.hpp"', "", "namespace girp::fixtures::data {", ""]
for name in KERNELS:
    raw = (ROOT / "fixtures" / "kernels" / f"{name}.spv").read_bytes()
    words = struct.unpack("<%dI" % (len(raw) // 4), raw)
    out.append(f"extern const std::uint32_t k_{name}[] = {{")
    for i in range(0, len(words), 6):
        out.append("    " + ", ".join(f"0x{w:08x}" for w in words[i:i + 6]) + ",")
    out.append("};")
    out.append(f"extern const std::size_t k_{name}_words = {len(words)};")
    out.append("")
out.append("}  // namespace girp::fixtures::data")
(ROOT / "src" / "fixtures" / "kernels_data.cpp").write_text("\n".join(out) + "\n")
