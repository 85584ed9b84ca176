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

#include "sgr/drawing.hpp"
#include "sgr/realizer.hpp"
#include "sgr/report.hpp"
#include "sgr/triangulation.hpp"

namespace sgr {

/// Sign of the orientation of (a, b, c), computed as the 3x3 determinant of
/// the barycentric rows. A1, A2, A3 is counterclockwise, so +1 means ccw in
/// the Cartesian placement. Evaluated in 128-bit integers.
int orientation(const Triple& a, const Triple& b, const Triple& c);

/// Closed-segment intersection (touching and collinear overlap count).
bool segments_intersect(const Triple& a, const Triple& b, const Triple& c, const Triple& d);

/// Each outgoing Ti edge u -> v must satisfy (v - u)_i > 0 and the two other
/// components <= 0, i.e. lie in the 60-degree wedge around the direction of
/// Ai. Edges attaining a zero component are listed as notes.
ValidationReport validate_three_wedge(const Triangulation& t, const Realizer& r, const Drawing& d);

/// For each outgoing Ti edge u -> v, no other vertex w may lie strictly
/// inside the triangle cut from u's sector s(2i-1) by v's level line:
///   w_i < v_i, w_(i+1) < u_(i+1), w_(i-1) < u_(i-1).
ValidationReport validate_enclosing_triangle(const Triangulation& t, const Realizer& r,
                                             const Drawing& d);

/// Pairwise exact test: straight edges meet only at shared endpoints.
/// Quadratic in the edge count.
ValidationReport validate_planarity(const Triangulation& t, const Drawing& d);

}  // namespace sgr
