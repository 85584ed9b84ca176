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

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sgr/drawing.hpp"
#include "sgr/triangulation.hpp"
#include "sgr/vrac.hpp"

namespace sgr {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// .tri: first content line is n, then one line per vertex listing its
// neighbours in counterclockwise order. '#' starts a comment; blank lines are
// ignored. The outer face is (0, 1, 2).

/// Parses and validates; throws ParseError or TriangulationError.
Triangulation parse_tri(std::string_view text);
std::string format_tri(const Triangulation& t);
Triangulation read_tri(const std::filesystem::path& path);
void write_tri(const Triangulation& t, const std::filesystem::path& path);

// .bary: "denom D" followed by one "v x1 x2 x3" line per vertex.
std::string format_bary(const Drawing& d);
Drawing parse_bary(std::string_view text);

// .sat: one "u sat1 sat2 sat3" line per internal vertex.
std::string format_sat(const SaturatedGraph& sg);

/// Writes through a temporary sibling file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);
std::string read_file(const std::filesystem::path& path);

}  // namespace sgr
