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
#include <cstdint>
#include <vector>

#include "sgr/realizer.hpp"
#include "sgr/report.hpp"
#include "sgr/triangulation.hpp"

namespace sgr {

/// Unnormalised barycentric coordinates; the point is triple / denom.
using Triple = std::array<std::int64_t, 3>;

/// Exact Schnyder drawing: coords[v] = face counts of v's three regions,
/// all rows summing to denom = 2n - 5.
struct Drawing {
  std::vector<Triple> coords;
  std::int64_t denom = 0;

  std::size_t n() const { return coords.size(); }
  friend bool operator==(const Drawing&, const Drawing&) = default;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Affine image of a drawing with A1 = (1/2, sqrt(3)/2), A2 = (0, 0),
/// A3 = (1, 0).
struct CartesianPlacement {
  std::vector<Point2> points;
};

/// Number of internal faces in each of the regions R1(v), R2(v), R3(v).
/// Region Ri(v) is bounded by the root paths P(i-1)(v), P(i+1)(v) and the
/// outer edge A(i-1)A(i+1). Linear time: the interior vertex count comes
/// from Ti subtree sizes accumulated along the two bounding paths and the
/// face count from Euler's formula for a triangulated disk,
///   faces = 2 * interior + boundary - 2.
std::vector<Triple> region_counts(const Triangulation& t, const Realizer& r);

/// Independent reference for region_counts: walks the root paths explicitly
/// and flood-fills the internal faces of each region. Quadratic; meant for
/// small instances.
std::vector<Triple> region_counts_oracle(const Triangulation& t, const Realizer& r);

/// Throws RealizerError for n < 4.
Drawing compute_drawing(const Triangulation& t, const Realizer& r);

/// Non-negative rows summing to denom, corners at unit triples, distinct rows.
ValidationReport validate_drawing(const Drawing& d);

CartesianPlacement to_cartesian(const Drawing& d);

}  // namespace sgr
