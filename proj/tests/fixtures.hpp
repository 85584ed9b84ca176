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

#include "sgr/triangulation.hpp"

namespace sgr::testing {

inline constexpr VertexId kU = 3;
inline constexpr VertexId kV = 4;

// K4: u inside the outer triangle.
inline Rotation k4_rotation() { return {{kA2, kU, kA3}, {kA3, kU, kA1}, {kA1, kU, kA2}, {kA1, kA2, kA3}}; }

// T5: K4 plus v stacked into the face (A1, A2, u).
inline Rotation t5_rotation() {
  return {{kA2, kV, kU, kA3}, {kA3, kU, kV, kA1}, {kA1, kU, kA2}, {kA1, kV, kA2, kA3}, {kA1, kA2, kU}};
}

inline Triangulation k4() { return build_triangulation(k4_rotation()); }
inline Triangulation t5() { return build_triangulation(t5_rotation()); }

}  // namespace sgr::testing
