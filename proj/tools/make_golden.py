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

"""Writes the golden wire frames in tests/golden.

Assembled with struct straight from the frame layout, independently of the
C++ encoder. The values used here are mirrored in tests/unit/wire_test.cpp.
"""

import hashlib
import pathlib
import struct
import sys

OUT = pathlib.Path(__file__).resolve().parent.parent / "tests" / "golden"

SESSION = bytes(range(0x10, 0x20))
HASH = bytes(range(0xA0, 0xC0))


def frame(msg_type, payload, session=SESSION, request_id=0x0102030405060708, flags=0):
    return (b"GIRP" + struct.pack("<BBHH", 1, msg_type, flags, 0) + session +
            struct.pack("<QI", request_id, len(payload)) + payload)


def str16(s):
    b = s.encode()
    return struct.pack("<H", len(b)) + b


def blob32(b):
    return struct.pack("<I", len(b)) + b


FRAMES = {
    "ping": frame(0x10, struct.pack("<Q", 0), session=bytes(16), request_id=1),
    "hello": frame(0x01, struct.pack("<BII", 0, 0x00010000, 0x00010600) + str16("interp")),
    "hello_ack": frame(0x02, SESSION + str16("name=reference-interp;spirv=subset")),
    "load_module": frame(0x03, HASH + blob32(bytes([0x03, 0x02, 0x23, 0x07, 0, 0, 1, 0]))),
    "module_ack": frame(0x04, HASH + b"\x01"),
    "create_pipeline": frame(0x05, HASH + str16("main")),
    "pipeline_ack": frame(0x06, struct.pack("<Q", 7)),
    "alloc_buffer": frame(0x07, struct.pack("<QQ", 2, 262144)),
    "write_buffer": frame(0x08, struct.pack("<QQ", 2, 16) + blob32(b"\xde\xad\xbe\xef")),
    "dispatch": frame(0x09, struct.pack("<QIIIH", 7, 1024, 1, 1, 2) +
                      struct.pack("<IIQ", 0, 0, 1) + struct.pack("<IIQ", 0, 1, 2)),
    "dispatch_ack": frame(0x0A, struct.pack("<QQQ", 1000, 2000000, 3000)),
    "read_buffer": frame(0x0B, struct.pack("<QQI", 2, 0, 64)),
    "buffer_data": frame(0x0C, blob32(bytes(range(8)))),
    "export_session": frame(0x0D, b""),
    "session_snapshot": frame(0x0E, blob32(b"snapshot")),
    "import_session": frame(0x0F, blob32(b"snapshot")),
    "pong": frame(0x11, struct.pack("<Q", 0xFEEDFACECAFEBEEF)),
    "error": frame(0x12, struct.pack("<H", 0x0040) + str16("read past end")),
    "ack": frame(0x13, struct.pack("<QQ", 5, 123456)),
    "ping_degraded": frame(0x10, struct.pack("<Q", 9), flags=1),
}


def snapshot():
    """Two modules, one pipeline, two buffers, in canonical order."""
    mod_a = b"module-a"
    mod_b = b"module-b"
    mods = sorted([(hashlib.sha256(m).digest(), m) for m in (mod_a, mod_b)])
    body = struct.pack("<H", 1) + SESSION + struct.pack("<Q", 3)
    body += struct.pack("<I", len(mods))
    for h, m in mods:
        body += h + blob32(m)
    body += struct.pack("<I", 1) + struct.pack("<Q", 1) + hashlib.sha256(mod_a).digest() + str16("main")
    body += struct.pack("<I", 2)
    body += struct.pack("<QQ", 1, 4) + bytes([1, 2, 3, 4])
    body += struct.pack("<QQ", 9, 0)
    return body + hashlib.sha256(body).digest()


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    assert len(FRAMES["ping"]) == 46
    for name, data in FRAMES.items():
        (OUT / f"{name}.bin").write_bytes(data)
    (OUT / "snapshot_v1.bin").write_bytes(snapshot())
    print(f"wrote {len(FRAMES)} frames to {OUT}", file=sys.stderr)


if __name__ == "__main__":
    main()
