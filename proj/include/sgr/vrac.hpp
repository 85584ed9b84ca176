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

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgr/drawing.hpp"
#include "sgr/realizer.hpp"
#include "sgr/report.hpp"
#include "sgr/triangulation.hpp"

namespace sgr {

// Order relations and sectors over exact coordinate triples. For coordinate
// index i, u <_i v iff u_i < v_i (u is farther from the side opposite Ai).

class CoordinateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Componentwise sign of v - u.
struct SignTriple {
  std::array<int, 3> s{0, 0, 0};

  int operator[](int i) const { return s[i]; }
  SignTriple operator-() const { return {{-s[0], -s[1], -s[2]}}; }
  friend bool operator==(const SignTriple&, const SignTriple&) = default;
};

/// Sector s1..s6 around a reference vertex. Odd sectors hold the patterns
/// (+,-,-), (-,+,-), (-,-,+); even sectors (+,+,-), (-,+,+), (+,-,+).
/// `boundary` is set when a zero sign was resolved to the adjacent odd sector.
struct SectorId {
  int value = 0;
  bool boundary = false;

  bool odd() const { return value % 2 == 1; }
  friend bool operator==(const SectorId&, const SectorId&) = default;
};

/// Sector directly opposite s_j (s_(j+3), 1-indexed, cyclic).
inline int opposite_sector(int j) { return (j + 2) % 6 + 1; }

/// Throws CoordinateError when u == v.
SignTriple sign_triple(const Triple& u, const Triple& v);
SectorId classify_sector(const Triple& u, const Triple& t);

struct BoundaryHit {
  VertexId u = kNoVertex;
  VertexId w = kNoVertex;
  SectorId sector;
};

/// One retained edge per odd sector s(2k-1), k = 1..3, at every internal
/// vertex. Corners have no entries.
struct SaturatedGraph {
  /// sat[u][k-1], kNoVertex for corners.
  std::vector<std::array<VertexId, 3>> sat;
  /// Neighbour classifications that went through zero-sign resolution.
  std::vector<BoundaryHit> boundary_hits;

  VertexId at(VertexId u, int k) const { return sat[u][k - 1]; }
};

struct SaturationProblem {
  enum class Kind { kEmptySector, kNoUniqueMinimum };
  Kind kind;
  VertexId u;
  int k;  // odd sector s(2k-1)
  std::vector<VertexId> candidates;
};

class SaturationError : public std::runtime_error {
 public:
  explicit SaturationError(std::vector<SaturationProblem> problems);
  const std::vector<SaturationProblem>& problems() const { return problems_; }

 private:
  std::vector<SaturationProblem> problems_;
};

struct SectorCandidate {
  VertexId id = kNoVertex;
  Triple coords{};
};

/// Least element of the dominance order of odd sector s(2k-1) among the
/// candidates, or kNoVertex when there is none (or no candidates).
VertexId least_in_sector(const std::vector<SectorCandidate>& candidates, int k);

/// Keeps, for every internal vertex and odd sector, the neighbour that is the
/// least element of the sector's dominance order (for s1: v <= w iff
/// v1 <= w1, v2 >= w2, v3 >= w3; cyclic for s3, s5). Throws SaturationError
/// listing every empty sector or sector without a least element.
SaturatedGraph extract_saturated(const Triangulation& t, const Drawing& d);

/// Exactly one retained edge per odd sector at each internal vertex, each a
/// distinct triangulation neighbour; none at corners.
ValidationReport check_saturated(const Triangulation& t, const SaturatedGraph& sg);

struct SaturationMismatch {
  VertexId u = kNoVertex;
  int k = 0;
  VertexId saturated = kNoVertex;
  VertexId parent = kNoVertex;
};

struct SaturationDiff {
  bool equal = true;
  std::vector<SaturationMismatch> mismatches;
};

/// Compares sat(u, k) with u's parent in Tk for every internal vertex.
SaturationDiff saturated_equals_realizer(const SaturatedGraph& sg, const Realizer& r);

}  // namespace sgr
