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

// Regenerates the .spv fixtures from their GLSL sources.
//   npm install @webgpu/glslang
//   node compile.js <in.comp> <out.spv> [spirv-version]
const glslangInit = require('@webgpu/glslang/dist/node-devel/glslang.js');
const fs = require('fs');

glslangInit().then(glslang => {
  const src = fs.readFileSync(process.argv[2], 'utf8');
  const version = process.argv[4] || '1.0';
  const words = glslang.compileGLSL(src, 'compute', false, version);
  fs.writeFileSync(process.argv[3], Buffer.from(words.buffer, words.byteOffset, words.byteLength));
});
