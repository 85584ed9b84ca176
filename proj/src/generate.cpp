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

#include "sgr/generate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include <fmt/format.h>

namespace sgr {

namespace {

// std::uniform_int_distribution is implementation-defined; modulo keeps the
// generators bitwise reproducible across standard libraries.
std::size_t draw(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

std::size_t index_of(const std::vector<VertexId>& row, VertexId v) {
  return static_cast<std::size_t>(std::find(row.begin(), row.end(), v) - row.begin());
}

// Inserts `x` right after `after` in the cyclic list.
void insert_after(std::vector<VertexId>& row, VertexId after, VertexId x) {
  row.insert(row.begin() + static_cast<std::ptrdiff_t>(index_of(row, after) + 1), x);
}

void erase_value(std::vector<VertexId>& row, VertexId v) {
  row.erase(row.begin() + static_cast<std::ptrdiff_t>(index_of(row, v)));
}

// Third vertex of the face left of u -> v.
VertexId apex(const Rotation& rot, VertexId u, VertexId v) {
  const auto& row = rot[v];
  const std::size_t k = index_of(row, u);
  return row[(k + row.size() - 1) % row.size()];
}

}  // namespace

Triangulation generate_stacked(std::size_t n, std::uint64_t seed) {
  if (n < 4) throw std::invalid_argument(fmt::format("generate_stacked needs n >= 4, got {}", n));
  std::mt19937_64 rng(seed);
  Rotation rot(n);
  rot[kA1] = {kA2, kA3};
  rot[kA2] = {kA3, kA1};
  rot[kA3] = {kA1, kA2};
  // Internal faces, each listed counterclockwise.
  std::vector<std::array<VertexId, 3>> faces{{kA1, kA2, kA3}};
  faces.reserve(2 * n);
  for (std::size_t k = 3; k < n; ++k) {
    const auto x = static_cast<VertexId>(k);
    const std::size_t pick = draw(rng, faces.size());
    const auto [a, b, c] = faces[pick];
    insert_after(rot[a], b, x);
    insert_after(rot[b], c, x);
    insert_after(rot[c], a, x);
    rot[x] = {a, b, c};
    faces[pick] = {a, b, x};
    faces.push_back({b, c, x});
    faces.push_back({c, a, x});
  }
  return build_triangulation(std::move(rot));
}

Triangulation randomize_flips(const Triangulation& t, std::size_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Rotation rot = t.rotation();
  const std::size_t halves = 2 * t.edge_count();
  for (std::size_t attempt = 0; attempt < k; ++attempt) {
    std::size_t h = draw(rng, halves);
    VertexId a = 0;
    while (h >= rot[a].size()) {
      h -= rot[a].size();
      ++a;
    }
    const VertexId b = rot[a][h];
    if (is_corner(a) && is_corner(b)) continue;
    const VertexId c = apex(rot, a, b);
    const VertexId d = apex(rot, b, a);
    if (std::find(rot[c].begin(), rot[c].end(), d) != rot[c].end()) continue;
    // Faces (a,b,c) and (b,a,d) become (a,d,c) and (d,b,c).
    erase_value(rot[a], b);
    erase_value(rot[b], a);
    insert_after(rot[c], a, d);
    insert_after(rot[d], b, c);
  }
  return build_triangulation(std::move(rot));
}

}  // namespace sgr
