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
#include <optional>
#include <stdexcept>
#include <vector>

#include "sgr/report.hpp"
#include "sgr/triangulation.hpp"

namespace sgr {

/// Trees are indexed 0, 1, 2 for T1, T2, T3; tree i is rooted at corner i.
inline constexpr int kTreeCount = 3;

inline int tree_succ(int i) { return (i + 1) % 3; }
inline int tree_pred(int i) { return (i + 2) % 3; }

/// Schnyder wood: every internal vertex has one outgoing edge per tree.
struct Realizer {
  /// parent[v][i] is v's parent in tree i; kNoVertex for corners.
  std::vector<std::array<VertexId, 3>> parent;

  VertexId parent_of(VertexId v, int tree) const { return parent[v][tree]; }

  /// Tree of the directed edge u -> v, if it is a realizer edge.
  std::optional<int> label(VertexId u, VertexId v) const {
    if (is_corner(u)) return std::nullopt;
    for (int i = 0; i < kTreeCount; ++i)
      if (parent[u][i] == v) return i;
    return std::nullopt;
  }

  friend bool operator==(const Realizer&, const Realizer&) = default;
};

class RealizerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Schnyder realizer by repeated contraction of edges (A1, x), x being the
/// lowest-index neighbour of A1 that shares exactly two neighbours with it.
/// Throws RealizerError for n < 4 or when no contractible neighbour exists.
Realizer compute_realizer(const Triangulation& t);

/// Checks out-degree, edge-disjointness and coverage, rootedness/acyclicity of
/// each tree, and the counterclockwise incidence pattern
///   out T1, in T3*, out T2, in T1*, out T3, in T2*
/// at every internal vertex (at corner Ai every internal edge enters in Ti).
ValidationReport validate_realizer(const Triangulation& t, const Realizer& r);

}  // namespace sgr
