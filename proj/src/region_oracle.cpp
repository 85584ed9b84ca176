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

#include <algorithm>
#include <queue>

#include "sgr/drawing.hpp"

namespace sgr {

std::vector<Triple> region_counts_oracle(const Triangulation& t, const Realizer& r) {
  const std::size_t n = t.n();
  const auto total = static_cast<std::int64_t>(2 * n) - 5;
  const std::size_t halves = 2 * t.edge_count();

  // Undirected edge id: the smaller of the two half-edge indices.
  auto edge_id = [&](std::size_t h) { return std::min(h, t.twin(h)); };
  std::vector<std::size_t> face_half(t.face_count());
  for (std::size_t h = 0; h < halves; ++h) face_half[t.face_of(h)] = h;

  std::vector<Triple> out(n, Triple{0, 0, 0});
  for (std::size_t c = 0; c < 3; ++c) out[c][c] = total;

  std::vector<char> wall(halves, 0);
  std::vector<char> seen(t.face_count(), 0);
  for (std::size_t vi = 3; vi < n; ++vi) {
    for (int i = 0; i < kTreeCount; ++i) {
      std::fill(wall.begin(), wall.end(), 0);
      std::fill(seen.begin(), seen.end(), 0);

      for (int j : {tree_succ(i), tree_pred(i)}) {
        VertexId v = static_cast<VertexId>(vi);
        while (!is_corner(v)) {
          const VertexId p = r.parent[v][j];
          wall[edge_id(t.half_edge(v, p))] = 1;
          v = p;
        }
      }
      const VertexId a = static_cast<VertexId>(tree_succ(i));
      const VertexId b = static_cast<VertexId>(tree_pred(i));
      std::size_t seed = t.half_edge(a, b);
      if (t.face_of(seed) == t.outer_face()) seed = t.twin(seed);
      wall[edge_id(seed)] = 1;

      std::queue<std::size_t> q;
      q.push(t.face_of(seed));
      seen[t.face_of(seed)] = 1;
      std::int64_t count = 0;
      while (!q.empty()) {
        const std::size_t f = q.front();
        q.pop();
        ++count;
        std::size_t h = face_half[f];
        for (int k = 0; k < 3; ++k, h = t.next(h)) {
          if (wall[edge_id(h)]) continue;
          const std::size_t g = t.face_of(t.twin(h));
          if (g == t.outer_face() || seen[g]) continue;
          seen[g] = 1;
          q.push(g);
        }
      }
      out[vi][i] = count;
    }
  }
  return out;
}

}  // namespace sgr
