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

#include <cstddef>
#include <cstdint>

#include "sgr/triangulation.hpp"

namespace sgr {

/// Stacked (Apollonian) triangulation on n >= 4 vertices: starting from the
/// outer triangle, vertex k is inserted into a uniformly chosen internal face
/// and joined to its three corners. Deterministic in (n, seed).
Triangulation generate_stacked(std::size_t n, std::uint64_t seed);

/// Performs k random flip attempts on internal edges. Outer edges are never
/// flipped and a flip creating a parallel edge is skipped. Deterministic in
/// (t, k, seed).
Triangulation randomize_flips(const Triangulation& t, std::size_t k, std::uint64_t seed);

}  // namespace sgr
