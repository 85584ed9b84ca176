// Copyright 2026 The schnyder-greedy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sgr/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include <fmt/format.h>

namespace sgr {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> fields;
};

// Content lines with comments stripped, keeping their 1-based line numbers.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(pos, end - pos);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t k = 0;
    while (k < raw.size()) {
      while (k < raw.size() && (raw[k] == ' ' || raw[k] == '\t' || raw[k] == '\r')) ++k;
      std::size_t start = k;
      while (k < raw.size() && raw[k] != ' ' && raw[k] != '\t' && raw[k] != '\r') ++k;
      if (k > start) line.fields.push_back(raw.substr(start, k - start));
    }
    if (!line.fields.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

template <typename Int>
Int to_int(std::string_view field, std::size_t line) {
  Int value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(line, fmt::format("expected an integer, got '{}'", field));
  }
  return value;
}

std::size_t last_line(std::string_view text) {
  std::size_t lines = 1;
  for (char c : text) lines += c == '\n';
  return lines;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(fmt::format("line {}: {}", line, what)), line_(line) {}

Triangulation parse_tri(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(last_line(text), "missing vertex count");
  const Line& head = lines.front();
  if (head.fields.size() != 1) throw ParseError(head.number, "first line must hold only the vertex count");
  const auto n = to_int<long long>(head.fields[0], head.number);
  if (n < 3) throw ParseError(head.number, fmt::format("vertex count must be at least 3, got {}", n));
  if (lines.size() - 1 < static_cast<std::size_t>(n)) {
    throw ParseError(last_line(text),
                     fmt::format("truncated: expected {} vertex lines, found {}", n, lines.size() - 1));
  }
  if (lines.size() - 1 > static_cast<std::size_t>(n)) {
    throw ParseError(lines[static_cast<std::size_t>(n) + 1].number, "unexpected extra line");
  }
  Rotation rot(static_cast<std::size_t>(n));
  for (std::size_t v = 0; v < rot.size(); ++v) {
    const Line& line = lines[v + 1];
    for (std::string_view f : line.fields) {
      const auto w = to_int<long long>(f, line.number);
      if (w < 0 || w >= n) throw ParseError(line.number, fmt::format("neighbour {} out of range", w));
      rot[v].push_back(static_cast<VertexId>(w));
    }
  }
  return build_triangulation(std::move(rot));
}

std::string format_tri(const Triangulation& t) {
  std::string out = fmt::format("# planar triangulation: {} vertices, {} edges, {} faces\n{}\n",
                                t.n(), t.edge_count(), t.face_count(), t.n());
  for (std::size_t v = 0; v < t.n(); ++v) {
    out += fmt::format("{}\n", fmt::join(t.neighbors(static_cast<VertexId>(v)), " "));
  }
  return out;
}

Triangulation read_tri(const std::filesystem::path& path) { return parse_tri(read_file(path)); }

void write_tri(const Triangulation& t, const std::filesystem::path& path) {
  write_file_atomic(path, format_tri(t));
}

std::string format_bary(const Drawing& d) {
  std::string out = fmt::format("denom {}\n", d.denom);
  for (std::size_t v = 0; v < d.n(); ++v) {
    const Triple& c = d.coords[v];
    out += fmt::format("{} {} {} {}\n", v, c[0], c[1], c[2]);
  }
  return out;
}

Drawing parse_bary(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(last_line(text), "missing denom line");
  const Line& head = lines.front();
  if (head.fields.size() != 2 || head.fields[0] != "denom") {
    throw ParseError(head.number, "first line must be 'denom D'");
  }
  Drawing d;
  d.denom = to_int<std::int64_t>(head.fields[1], head.number);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.fields.size() != 4) throw ParseError(line.number, "expected 'v x1 x2 x3'");
    const auto v = to_int<std::size_t>(line.fields[0], line.number);
    if (v != k - 1) throw ParseError(line.number, fmt::format("expected vertex {}, got {}", k - 1, v));
    d.coords.push_back({to_int<std::int64_t>(line.fields[1], line.number),
                        to_int<std::int64_t>(line.fields[2], line.number),
                        to_int<std::int64_t>(line.fields[3], line.number)});
  }
  return d;
}

std::string format_sat(const SaturatedGraph& sg) {
  std::string out;
  for (std::size_t u = 3; u < sg.sat.size(); ++u) {
    out += fmt::format("{} {} {} {}\n", u, sg.sat[u][0], sg.sat[u][1], sg.sat[u][2]);
  }
  return out;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error(fmt::format("cannot write {}", tmp.string()));
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error(fmt::format("write failed for {}", tmp.string()));
  }
  std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(fmt::format("cannot open {}", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace sgr
