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

#include "sgr/drawing.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace sgr {

namespace {

// Vertices ordered so that every vertex comes after its parent in `tree`.
std::vector<VertexId> top_down_order(const Realizer& r, int tree, std::vector<std::int64_t>& depth) {
  const std::size_t n = r.parent.size();
  depth.assign(n, -1);
  for (std::size_t c = 0; c < 3; ++c) depth[c] = 0;
  std::vector<VertexId> stack;
  for (std::size_t s = 3; s < n; ++s) {
    VertexId v = static_cast<VertexId>(s);
    while (depth[v] < 0) {
      stack.push_back(v);
      v = r.parent[v][tree];
    }
    while (!stack.empty()) {
      const VertexId w = stack.back();
      stack.pop_back();
      depth[w] = depth[r.parent[w][tree]] + 1;
    }
  }
  std::vector<VertexId> order(n);
  for (std::size_t v = 0; v < n; ++v) order[v] = static_cast<VertexId>(v);
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return depth[a] < depth[b]; });
  return order;
}

}  // namespace

std::vector<Triple> region_counts(const Triangulation& t, const Realizer& r) {
  const std::size_t n = t.n();
  const auto total = static_cast<std::int64_t>(2 * n) - 5;

  std::array<std::vector<std::int64_t>, 3> depth;
  std::array<std::vector<VertexId>, 3> order;
  std::array<std::vector<std::int64_t>, 3> size;
  for (int i = 0; i < kTreeCount; ++i) {
    order[i] = top_down_order(r, i, depth[i]);
    size[i].assign(n, 0);
    for (auto it = order[i].rbegin(); it != order[i].rend(); ++it) {
      const VertexId v = *it;
      if (is_corner(v)) continue;
      size[i][v] += 1;
      const VertexId p = r.parent[v][i];
      if (!is_corner(p)) size[i][p] += size[i][v];
    }
  }

  // acc[j][i][v]: sum over internal x on P_j(v) of (|Ti subtree of x| - 1).
  std::array<std::array<std::vector<std::int64_t>, 3>, 3> acc;
  for (int j = 0; j < kTreeCount; ++j) {
    for (int i = 0; i < kTreeCount; ++i) {
      if (i == j) continue;
      auto& a = acc[j][i];
      a.assign(n, 0);
      for (VertexId v : order[j]) {
        if (is_corner(v)) continue;
        a[v] = a[r.parent[v][j]] + size[i][v] - 1;
      }
    }
  }

  std::vector<Triple> out(n);
  for (std::size_t c = 0; c < 3; ++c) {
    out[c] = {0, 0, 0};
    out[c][c] = total;
  }
  for (std::size_t vi = 3; vi < n; ++vi) {
    for (int i = 0; i < kTreeCount; ++i) {
      const int a = tree_succ(i);
      const int b = tree_pred(i);
      const std::int64_t interior = acc[a][i][vi] + acc[b][i][vi] - (size[i][vi] - 1);
      const std::int64_t boundary = depth[a][vi] + depth[b][vi] + 1;
      out[vi][i] = 2 * interior + boundary - 2;
    }
  }
  return out;
}

Drawing compute_drawing(const Triangulation& t, const Realizer& r) {
  if (t.n() < 4) throw RealizerError("drawing needs at least one internal vertex (n >= 4)");
  return Drawing{region_counts(t, r), static_cast<std::int64_t>(2 * t.n()) - 5};
}

ValidationReport validate_drawing(const Drawing& d) {
  ValidationReport report;
  const std::size_t n = d.n();
  if (n < 4 || d.denom != static_cast<std::int64_t>(2 * n) - 5) {
    report.fail("denominator", fmt::format("denominator {} for {} vertices", d.denom, n));
  }
  for (std::size_t vi = 0; vi < n; ++vi) {
    const auto v = static_cast<VertexId>(vi);
    const Triple& c = d.coords[vi];
    if (c[0] < 0 || c[1] < 0 || c[2] < 0) {
      report.fail("non_negative", fmt::format("vertex {} has a negative coordinate", v), {v});
    }
    if (c[0] + c[1] + c[2] != d.denom) {
      report.fail("row_sum",
                  fmt::format("vertex {} sums to {}, expected {}", v, c[0] + c[1] + c[2], d.denom),
                  {v});
    }
    if (is_corner(v)) {
      Triple want{0, 0, 0};
      want[vi] = d.denom;
      if (c != want) report.fail("corner", fmt::format("corner A{} is not a unit triple", v + 1), {v});
    }
  }
  std::vector<std::pair<Triple, VertexId>> rows;
  rows.reserve(n);
  for (std::size_t v = 0; v < n; ++v) rows.emplace_back(d.coords[v], static_cast<VertexId>(v));
  std::sort(rows.begin(), rows.end());
  for (std::size_t k = 1; k < rows.size(); ++k) {
    if (rows[k].first == rows[k - 1].first) {
      report.fail("distinct",
                  fmt::format("vertices {} and {} share coordinates", rows[k - 1].second,
                              rows[k].second),
                  {rows[k - 1].second, rows[k].second});
    }
  }
  return report;
}

CartesianPlacement to_cartesian(const Drawing& d) {
  const double h = std::sqrt(3.0) / 2.0;
  const auto denom = static_cast<double>(d.denom);
  CartesianPlacement p;
  p.points.reserve(d.n());
  for (const Triple& c : d.coords) {
    const auto x1 = static_cast<double>(c[0]);
    const auto x3 = static_cast<double>(c[2]);
    p.points.push_back({(0.5 * x1 + x3) / denom, h * x1 / denom});
  }
  return p;
}

}  // namespace sgr
