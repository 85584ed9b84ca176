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

#include "sgr/geometry_checks.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace sgr {

namespace {

using Wide = __int128;

std::string show(const Triple& c) { return fmt::format("({},{},{})", c[0], c[1], c[2]); }

// c collinear with a, b: does it lie on the closed segment?
bool within(const Triple& a, const Triple& b, const Triple& c) {
  for (int k = 0; k < 3; ++k) {
    if (c[k] < std::min(a[k], b[k]) || c[k] > std::max(a[k], b[k])) return false;
  }
  return true;
}

Wide dot(const Triple& a, const Triple& b, const Triple& origin) {
  Wide s = 0;
  for (int k = 0; k < 3; ++k) s += Wide(a[k] - origin[k]) * Wide(b[k] - origin[k]);
  return s;
}

}  // namespace

int orientation(const Triple& a, const Triple& b, const Triple& c) {
  const Wide det = Wide(a[0]) * (Wide(b[1]) * c[2] - Wide(b[2]) * c[1]) -
                   Wide(a[1]) * (Wide(b[0]) * c[2] - Wide(b[2]) * c[0]) +
                   Wide(a[2]) * (Wide(b[0]) * c[1] - Wide(b[1]) * c[0]);
  return (det > 0) - (det < 0);
}

bool segments_intersect(const Triple& a, const Triple& b, const Triple& c, const Triple& d) {
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && within(a, b, c)) return true;
  if (o2 == 0 && within(a, b, d)) return true;
  if (o3 == 0 && within(c, d, a)) return true;
  if (o4 == 0 && within(c, d, b)) return true;
  return false;
}

ValidationReport validate_three_wedge(const Triangulation& t, const Realizer& r, const Drawing& d) {
  ValidationReport report;
  for (std::size_t ui = 3; ui < t.n(); ++ui) {
    const auto u = static_cast<VertexId>(ui);
    std::array<int, 3> per_wedge{0, 0, 0};
    for (int i = 0; i < kTreeCount; ++i) {
      const VertexId v = r.parent[u][i];
      Triple diff;
      for (int k = 0; k < 3; ++k) diff[k] = d.coords[v][k] - d.coords[u][k];
      int wedge = -1;
      for (int k = 0; k < 3; ++k) {
        if (diff[k] > 0 && diff[tree_succ(k)] <= 0 && diff[tree_pred(k)] <= 0) wedge = k;
      }
      if (wedge >= 0) ++per_wedge[wedge];
      if (wedge != i) {
        report.fail("three_wedge",
                    fmt::format("T{} edge {}->{} has difference {} outside wedge {}", i + 1, u, v,
                                show(diff), i + 1),
                    {u, v});
      } else if (diff[tree_succ(i)] == 0 || diff[tree_pred(i)] == 0) {
        report.note("wedge_boundary",
                    fmt::format("T{} edge {}->{} lies on a wedge boundary {}", i + 1, u, v, show(diff)),
                    {u, v});
      }
    }
    for (int k = 0; k < 3; ++k) {
      if (per_wedge[k] != 1) {
        report.fail("one_per_wedge",
                    fmt::format("vertex {} has {} outgoing edges in wedge {}", u, per_wedge[k], k + 1),
                    {u});
      }
    }
  }
  return report;
}

ValidationReport validate_enclosing_triangle(const Triangulation& t, const Realizer& r,
                                             const Drawing& d) {
  ValidationReport report;
  const std::size_t n = t.n();
  for (std::size_t ui = 3; ui < n; ++ui) {
    const auto u = static_cast<VertexId>(ui);
    const Triple& cu = d.coords[ui];
    for (int i = 0; i < kTreeCount; ++i) {
      const VertexId v = r.parent[u][i];
      const Triple& cv = d.coords[v];
      const int a = tree_succ(i);
      const int b = tree_pred(i);
      for (std::size_t wi = 0; wi < n; ++wi) {
        const auto w = static_cast<VertexId>(wi);
        if (w == u || w == v) continue;
        const Triple& cw = d.coords[wi];
        if (cw[i] < cv[i] && cw[a] < cu[a] && cw[b] < cu[b]) {
          report.fail("enclosing_triangle",
                      fmt::format("vertex {} {} lies inside the triangle of T{} edge {}->{}", w,
                                  show(cw), i + 1, u, v),
                      {u, v, w});
        }
      }
    }
  }
  return report;
}

ValidationReport validate_planarity(const Triangulation& t, const Drawing& d) {
  ValidationReport report;
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(t.edge_count());
  for (std::size_t ui = 0; ui < t.n(); ++ui) {
    const auto u = static_cast<VertexId>(ui);
    for (VertexId v : t.neighbors(u))
      if (u < v) edges.emplace_back(u, v);
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [a, b] = edges[e];
    for (std::size_t f = e + 1; f < edges.size(); ++f) {
      const auto [c, dd] = edges[f];
      const Triple& pa = d.coords[a];
      const Triple& pb = d.coords[b];
      const Triple& pc = d.coords[c];
      const Triple& pd = d.coords[dd];
      bool bad = false;
      VertexId shared = kNoVertex;
      VertexId x = kNoVertex;
      VertexId y = kNoVertex;
      if (a == c) shared = a, x = b, y = dd;
      else if (a == dd) shared = a, x = b, y = c;
      else if (b == c) shared = b, x = a, y = dd;
      else if (b == dd) shared = b, x = a, y = c;
      if (shared != kNoVertex) {
        const Triple& ps = d.coords[shared];
        bad = orientation(ps, d.coords[x], d.coords[y]) == 0 &&
              dot(d.coords[x], d.coords[y], ps) > 0;
      } else {
        bad = segments_intersect(pa, pb, pc, pd);
      }
      if (bad) {
        report.fail("planarity", fmt::format("edges {}-{} and {}-{} intersect", a, b, c, dd),
                    {a, b, c, dd});
      }
    }
  }
  return report;
}

}  // namespace sgr
