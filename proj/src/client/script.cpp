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

#include "girp/client/script.hpp"

#include <charconv>
#include <cstring>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include "girp/fixtures.hpp"

namespace girp::client {
namespace {

std::vector<std::string> split(const std::string& line) {
  std::istringstream is(line.substr(0, line.find('#')));
  return {std::istream_iterator<std::string>(is), std::istream_iterator<std::string>()};
}

std::uint64_t number(const std::string& text) {
  std::uint64_t v = 0;
  int base = 10;
  const char* first = text.data();
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    base = 16;
    first += 2;
  }
  auto [end, ec] = std::from_chars(first, text.data() + text.size(), v, base);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw Error(ErrorCode::ScriptError, "not a number: '" + text + "'");
  }
  return v;
}

std::uint32_t number32(const std::string& text) {
  std::uint64_t v = number(text);
  if (v > UINT32_MAX) throw Error(ErrorCode::ScriptError, text + " does not fit in 32 bits");
  return static_cast<std::uint32_t>(v);
}

Bytes read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ScriptError, "cannot open " + path.string());
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Bytes u32_bytes(const std::vector<std::uint32_t>& values) {
  Bytes out(values.size() * 4);
  std::memcpy(out.data(), values.data(), out.size());
  return out;
}

void arity(const std::vector<std::string>& t, std::size_t min, std::size_t max) {
  if (t.size() < min || t.size() > max) {
    throw Error(ErrorCode::ScriptError, "wrong number of arguments for " + t[0]);
  }
}

std::string describe(const std::optional<Staleness>& s) {
  return s ? " stale-since-epoch " + std::to_string(s->sync_epoch) : "";
}

}  // namespace

Bytes read_module_source(const std::string& arg, const std::filesystem::path& base_dir) {
  constexpr std::string_view kPrefix = "fixture:";
  if (arg.rfind(kPrefix, 0) == 0) {
    std::string name = arg.substr(kPrefix.size()) + ".spv";
    using fixtures::Kernel;
    for (auto k : {Kernel::Multiply, Kernel::MultiplySb13, Kernel::Saxpy, Kernel::Fill, Kernel::Frame,
                   Kernel::Branch}) {
      if (name == fixtures::file_name(k)) return fixtures::bytes(k);
    }
    throw Error(ErrorCode::ScriptError, "no fixture named " + arg.substr(kPrefix.size()));
  }
  return read_file(base_dir / arg);
}

ScriptStats run_script(OffloadClient& client, std::istream& script,
                       const std::filesystem::path& base_dir, std::ostream& out) {
  ScriptStats stats;
  std::optional<Digest> last_module;
  std::optional<std::uint64_t> last_pipeline;
  std::string line;
  int line_no = 0;

  while (std::getline(script, line)) {
    ++line_no;
    auto t = split(line);
    if (t.empty()) continue;
    ++stats.commands;
    try {
      const std::string& cmd = t[0];
      if (cmd == "load") {
        arity(t, 2, 2);
        last_module = client.load_module(read_module_source(t[1], base_dir));
        out << "module " << last_module->hex() << "\n";
      } else if (cmd == "pipeline") {
        arity(t, 3, 3);
        Digest hash;
        if (t[1] == "@last") {
          if (!last_module) throw Error(ErrorCode::ScriptError, "no module loaded yet");
          hash = *last_module;
        } else {
          try {
            hash = Digest::from_hex(t[1]);
          } catch (const Error& e) {
            throw Error(ErrorCode::ScriptError, e.what());
          }
        }
        last_pipeline = client.create_pipeline(hash, t[2]);
        out << "pipeline " << *last_pipeline << "\n";
      } else if (cmd == "alloc") {
        arity(t, 3, 3);
        client.alloc_buffer(number(t[1]), number(t[2]));
        out << "alloc " << t[1] << " " << t[2] << "\n";
      } else if (cmd == "write") {
        arity(t, 4, 4);
        Bytes data = read_file(base_dir / t[3]);
        client.write_buffer(number(t[1]), number(t[2]), data);
        out << "write " << t[1] << " " << data.size() << " bytes\n";
      } else if (cmd == "fill-u32" || cmd == "iota-u32") {
        arity(t, cmd == "fill-u32" ? 5 : 4, cmd == "fill-u32" ? 5 : 4);
        std::vector<std::uint32_t> values(number32(t[3]));
        for (std::size_t i = 0; i < values.size(); ++i) {
          values[i] = cmd == "fill-u32" ? number32(t[4]) : static_cast<std::uint32_t>(i);
        }
        client.write_buffer(number(t[1]), number(t[2]), u32_bytes(values));
        out << cmd << " " << t[1] << " " << values.size() << " words\n";
      } else if (cmd == "dispatch") {
        if (t.size() < 5) throw Error(ErrorCode::ScriptError, "wrong number of arguments for dispatch");
        std::uint64_t pipeline;
        if (t[1] == "@last") {
          if (!last_pipeline) throw Error(ErrorCode::ScriptError, "no pipeline created yet");
          pipeline = *last_pipeline;
        } else {
          pipeline = number(t[1]);
        }
        exec::Groups groups{number32(t[2]), number32(t[3]), number32(t[4])};
        std::vector<wire::BindingRef> bindings;
        for (std::size_t i = 5; i < t.size(); ++i) {
          auto c1 = t[i].find(':');
          auto c2 = t[i].find(':', c1 == std::string::npos ? c1 : c1 + 1);
          if (c1 == std::string::npos || c2 == std::string::npos) {
            throw Error(ErrorCode::ScriptError, "binding must be set:binding:buffer, got " + t[i]);
          }
          bindings.push_back({number32(t[i].substr(0, c1)), number32(t[i].substr(c1 + 1, c2 - c1 - 1)),
                              number(t[i].substr(c2 + 1))});
        }
        auto r = client.dispatch(pipeline, groups, bindings);
        (r.origin == Origin::Remote ? stats.remote_dispatches : stats.local_dispatches)++;
        out << "dispatch " << origin_name(r.origin) << " prepare_ns " << r.timing.prepare_ns
            << " execute_ns " << r.timing.execute_ns << " readback_ns " << r.timing.readback_ns
            << describe(r.staleness) << "\n";
      } else if (cmd == "read") {
        if (t.size() != 4 && !(t.size() == 6 && t[4] == ">")) {
          throw Error(ErrorCode::ScriptError, "usage: read <id> <offset> <len> [> <file>]");
        }
        auto r = client.read_buffer(number(t[1]), number(t[2]), number32(t[3]));
        out << "read " << t[1] << " " << r.data.size() << " bytes " << origin_name(r.origin)
            << describe(r.staleness);
        if (t.size() == 6) {
          std::ofstream f(base_dir / t[5], std::ios::binary);
          f.write(reinterpret_cast<const char*>(r.data.data()), static_cast<std::streamsize>(r.data.size()));
          if (!f) throw Error(ErrorCode::ScriptError, "cannot write " + t[5]);
          out << " -> " << t[5];
        } else {
          out << " " << to_hex(ByteSpan(r.data.data(), std::min<std::size_t>(r.data.size(), 64)))
              << (r.data.size() > 64 ? "..." : "");
        }
        out << "\n";
      } else if (cmd == "expect-u32") {
        arity(t, 4, 4);
        std::uint64_t index = number(t[2]);
        auto r = client.read_buffer(number(t[1]), index * 4, 4);
        std::uint32_t got;
        std::memcpy(&got, r.data.data(), 4);
        if (got != number32(t[3])) {
          throw Error(ErrorCode::ScriptError, "buffer " + t[1] + "[" + t[2] + "] is " +
                                                  std::to_string(got) + ", expected " + t[3]);
        }
        out << "ok " << t[1] << "[" << t[2] << "] == " << got << "\n";
      } else if (cmd == "sleep") {
        arity(t, 2, 2);
        std::this_thread::sleep_for(std::chrono::milliseconds(number(t[1])));
        out << "slept " << t[1] << " ms\n";
      } else if (cmd == "reconnect") {
        arity(t, 1, 1);
        out << "reconnect " << (client.reconnect() ? "ok" : "failed") << "\n";
      } else {
        throw Error(ErrorCode::ScriptError, "unknown command '" + cmd + "'");
      }
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.detail());
    }
  }
  return stats;
}

}  // namespace girp::client
