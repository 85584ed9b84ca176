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

#include "sgr/realizer.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace sgr {

namespace {

struct Contraction {
  VertexId x;
  VertexId left;   // ccw successor of A1 around x; becomes x's T2 parent
  VertexId right;  // ccw predecessor of A1 around x; becomes x's T3 parent
  std::vector<VertexId> inner;  // neighbours of x strictly between left and right
};

void erase_value(std::vector<VertexId>& row, VertexId v) {
  row.erase(std::find(row.begin(), row.end(), v));
}

}  // namespace

Realizer compute_realizer(const Triangulation& t) {
  const std::size_t n = t.n();
  if (n < 4) throw RealizerError("realizer needs at least one internal vertex (n >= 4)");

  Rotation rot = t.rotation();
  std::vector<char> near_a1(n, 0);
  for (VertexId v : rot[kA1]) near_a1[v] = 1;

  std::vector<Contraction> steps;
  steps.reserve(n - 3);
  for (std::size_t remaining = n; remaining > 3; --remaining) {
    std::vector<VertexId> candidates;
    for (VertexId x : rot[kA1])
      if (!is_corner(x)) candidates.push_back(x);
    std::sort(candidates.begin(), candidates.end());

    VertexId chosen = kNoVertex;
    for (VertexId x : candidates) {
      const auto common = std::count_if(rot[x].begin(), rot[x].end(),
                                        [&](VertexId y) { return near_a1[y] != 0; });
      if (common == 2) {
        chosen = x;
        break;
      }
    }
    if (chosen == kNoVertex) {
      throw RealizerError(fmt::format(
          "no contractible neighbour of A1 with {} vertices left; input is not a triangulation",
          remaining));
    }

    const VertexId x = chosen;
    const auto& row = rot[x];
    const std::size_t deg = row.size();
    const std::size_t at = static_cast<std::size_t>(std::find(row.begin(), row.end(), kA1) - row.begin());
    Contraction step{x, row[(at + 1) % deg], row[(at + deg - 1) % deg], {}};
    for (std::size_t k = 2; k + 1 < deg; ++k) step.inner.push_back(row[(at + k) % deg]);

    auto& a1 = rot[kA1];
    const auto pos = std::find(a1.begin(), a1.end(), x);
    const auto insert_at = a1.erase(pos);
    a1.insert(insert_at, step.inner.begin(), step.inner.end());
    for (VertexId y : step.inner) {
      *std::find(rot[y].begin(), rot[y].end(), x) = kA1;
      near_a1[y] = 1;
    }
    erase_value(rot[step.left], x);
    erase_value(rot[step.right], x);
    near_a1[x] = 0;
    rot[x].clear();
    steps.push_back(std::move(step));
  }

  Realizer r;
  r.parent.assign(n, {kNoVertex, kNoVertex, kNoVertex});
  for (VertexId v : t.neighbors(kA1))
    if (!is_corner(v)) r.parent[v][0] = kA1;
  // A vertex's T1 parent is the vertex whose contraction made it adjacent to
  // A1; its T2/T3 parents are fixed by its own contraction.
  for (const Contraction& step : steps) {
    r.parent[step.x][1] = step.left;
    r.parent[step.x][2] = step.right;
    for (VertexId y : step.inner) r.parent[y][0] = step.x;
  }
  return r;
}

ValidationReport validate_realizer(const Triangulation& t, const Realizer& r) {
  ValidationReport report;
  const std::size_t n = t.n();
  if (r.parent.size() != n) {
    report.fail("shape", fmt::format("realizer has {} rows for {} vertices", r.parent.size(), n));
    return report;
  }

  bool parents_ok = true;
  for (std::size_t vi = 0; vi < n; ++vi) {
    const auto v = static_cast<VertexId>(vi);
    for (int i = 0; i < kTreeCount; ++i) {
      const VertexId p = r.parent[v][i];
      if (is_corner(v)) {
        if (p != kNoVertex) {
          report.fail("out_degree", fmt::format("corner {} has a parent in T{}", v, i + 1), {v});
          parents_ok = false;
        }
        continue;
      }
      if (p == kNoVertex) {
        report.fail("out_degree", fmt::format("vertex {} has no outgoing edge in T{}", v, i + 1), {v});
        parents_ok = false;
      } else if (p < 0 || static_cast<std::size_t>(p) >= n || !t.adjacent(v, p)) {
        report.fail("out_degree",
                    fmt::format("T{} parent {} of vertex {} is not a neighbour", i + 1, p, v), {v, p});
        parents_ok = false;
      }
    }
  }
  if (!parents_ok) return report;

  // Each internal edge carries exactly one label and one direction.
  std::vector<int> uses(2 * t.edge_count(), 0);
  for (std::size_t vi = 3; vi < n; ++vi) {
    const auto v = static_cast<VertexId>(vi);
    for (int i = 0; i < kTreeCount; ++i) ++uses[t.half_edge(v, r.parent[v][i])];
  }
  for (std::size_t h = 0; h < uses.size(); ++h) {
    const std::size_t g = t.twin(h);
    if (g < h) continue;
    const VertexId u = t.origin(h);
    const VertexId v = t.target(h);
    const int total = uses[h] + uses[g];
    if (t.is_outer_edge(u, v)) continue;
    if (total == 0) {
      report.fail("coverage", fmt::format("internal edge {}-{} has no label", u, v), {u, v});
    } else if (total > 1) {
      report.fail("disjointness", fmt::format("edge {}-{} is used {} times", u, v, total), {u, v});
    }
  }

  // Following Ti parents from any vertex must reach Ai without revisiting.
  for (int i = 0; i < kTreeCount; ++i) {
    constexpr VertexId kUnseen = -1;
    constexpr VertexId kOnStack = -2;
    constexpr VertexId kCyclic = -3;
    // root[v]: corner reached from v, or one of the markers above.
    std::vector<VertexId> root(n, kUnseen);
    for (VertexId c = 0; c < 3; ++c) root[c] = c;
    for (std::size_t start = 3; start < n; ++start) {
      if (root[start] != kUnseen) continue;
      std::vector<VertexId> path;
      VertexId v = static_cast<VertexId>(start);
      while (root[v] == kUnseen) {
        root[v] = kOnStack;
        path.push_back(v);
        v = r.parent[v][i];
      }
      VertexId end = root[v];
      if (end == kOnStack) {
        report.fail("acyclic", fmt::format("T{} contains a cycle through vertex {}", i + 1, v), {v});
        end = kCyclic;
      } else if (end >= 0 && end != i) {
        report.fail("rooted",
                    fmt::format("T{} path from {} ends at A{} instead of A{}", i + 1, start,
                                end + 1, i + 1),
                    {static_cast<VertexId>(start)});
      }
      for (VertexId p : path) root[p] = end;
    }
  }

  // Token for edge u -> w: 0..2 outgoing in tree i, 3..5 incoming in tree i.
  auto token = [&](VertexId u, VertexId w) -> int {
    for (int i = 0; i < kTreeCount; ++i)
      if (r.parent[u][i] == w) return i;
    if (!is_corner(w))
      for (int i = 0; i < kTreeCount; ++i)
        if (r.parent[w][i] == u) return 3 + i;
    return -1;
  };

  for (VertexId c = 0; c < 3; ++c) {
    for (VertexId w : t.neighbors(c)) {
      if (is_corner(w)) continue;
      if (r.parent[w][c] != c) {
        report.fail("corner_pattern",
                    fmt::format("edge {}-A{} does not enter A{} in T{}", w, c + 1, c + 1, c + 1),
                    {c, w});
      }
    }
  }

  for (std::size_t ui = 3; ui < n; ++ui) {
    const auto u = static_cast<VertexId>(ui);
    const auto nb = t.neighbors(u);
    const std::size_t deg = nb.size();
    const std::size_t start = static_cast<std::size_t>(t.position(u, r.parent[u][0]));
    std::vector<int> tokens;
    tokens.reserve(deg);
    for (std::size_t k = 0; k < deg; ++k) tokens.push_back(token(u, nb[(start + k) % deg]));

    // out1 (in3)* out2 (in1)* out3 (in2)*
    static constexpr int kOut[3] = {0, 1, 2};
    static constexpr int kIn[3] = {3 + 2, 3 + 0, 3 + 1};
    std::size_t k = 0;
    bool ok = true;
    for (int block = 0; block < 3 && ok; ++block) {
      if (k >= tokens.size() || tokens[k] != kOut[block]) {
        ok = false;
        break;
      }
      ++k;
      while (k < tokens.size() && tokens[k] == kIn[block]) ++k;
    }
    if (!ok || k != tokens.size()) {
      std::string seq;
      for (int tk : tokens) {
        if (!seq.empty()) seq += ' ';
        seq += tk < 0 ? std::string("?") : fmt::format("{}{}", tk < 3 ? "out" : "in", tk % 3 + 1);
      }
      report.fail("ccw_pattern", fmt::format("vertex {}: ccw incidence {} ", u, seq), {u});
    }
  }
  return report;
}

}  // namespace sgr
