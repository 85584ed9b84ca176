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
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgr/report.hpp"

namespace sgr {

using VertexId = int;

inline constexpr VertexId kA1 = 0;
inline constexpr VertexId kA2 = 1;
inline constexpr VertexId kA3 = 2;
inline constexpr VertexId kNoVertex = -1;

inline bool is_corner(VertexId v) { return v >= 0 && v < 3; }

/// Per-vertex counterclockwise cyclic neighbour lists.
using Rotation = std::vector<std::vector<VertexId>>;

class TriangulationError : public std::runtime_error {
 public:
  enum class Kind {
    kInconsistentRotation,
    kNotTriangulated,
    kWrongEdgeCount,
    kMissingOuterFace,
    kTooSmall,
  };

  TriangulationError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Immutable embedded planar triangulation. Vertices 0, 1, 2 are the outer
/// corners A1, A2, A3. Half-edge h = (u -> rotation[u][k]) has index
/// offset(u) + k. The face of a half-edge is the face on its left; with ccw
/// rotations the successor of (u -> v) is (v -> w), w being the neighbour of
/// v preceding u in ccw order.
class Triangulation {
 public:
  std::size_t n() const { return rotation_.size(); }
  std::size_t edge_count() const { return half_target_.size() / 2; }
  std::size_t face_count() const { return faces_.size(); }

  const Rotation& rotation() const { return rotation_; }
  std::span<const VertexId> neighbors(VertexId v) const { return rotation_[v]; }
  std::size_t degree(VertexId v) const { return rotation_[v].size(); }

  bool adjacent(VertexId u, VertexId v) const;
  /// Position of v in u's rotation, or -1.
  int position(VertexId u, VertexId v) const;

  std::size_t half_edge(VertexId u, std::size_t k) const { return offset_[u] + k; }
  std::size_t half_edge(VertexId u, VertexId v) const;
  VertexId origin(std::size_t h) const { return half_origin_[h]; }
  VertexId target(std::size_t h) const { return half_target_[h]; }
  std::size_t twin(std::size_t h) const { return half_twin_[h]; }
  std::size_t next(std::size_t h) const { return half_next_[h]; }
  std::size_t face_of(std::size_t h) const { return half_face_[h]; }

  /// Faces as vertex triples in traversal order (face on the left).
  const std::vector<std::array<VertexId, 3>>& faces() const { return faces_; }
  std::size_t outer_face() const { return outer_face_; }
  bool is_outer_edge(VertexId u, VertexId v) const {
    return is_corner(u) && is_corner(v) && u != v;
  }

  friend bool operator==(const Triangulation& a, const Triangulation& b) {
    return a.rotation_ == b.rotation_;
  }

 private:
  friend Triangulation build_triangulation(Rotation rotation);

  Rotation rotation_;
  std::vector<std::vector<VertexId>> sorted_;
  std::vector<std::size_t> offset_;
  std::vector<VertexId> half_origin_;
  std::vector<VertexId> half_target_;
  std::vector<std::size_t> half_twin_;
  std::vector<std::size_t> half_next_;
  std::vector<std::size_t> half_face_;
  std::vector<std::array<VertexId, 3>> faces_;
  std::size_t outer_face_ = 0;
};

/// Checks every triangulation invariant on a raw rotation system. Never throws.
ValidationReport validate_triangulation(const Rotation& rotation);
ValidationReport validate_triangulation(const Triangulation& t);

/// Builds the half-edge structure; throws TriangulationError naming the first
/// failed invariant.
Triangulation build_triangulation(Rotation rotation);

}  // namespace sgr
