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

#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "sgr/generate.hpp"
#include "sgr/geometry_checks.hpp"

using namespace sgr;
using namespace sgr::testing;

namespace {

struct Built {
  Triangulation t;
  Realizer r;
  Drawing d;
};

Built build(const Triangulation& t) {
  Realizer r = compute_realizer(t);
  Drawing d = compute_drawing(t, r);
  return {t, std::move(r), std::move(d)};
}

Triple diff(const Drawing& d, VertexId from, VertexId to) {
  Triple out;
  for (int k = 0; k < 3; ++k) out[k] = d.coords[to][k] - d.coords[from][k];
  return out;
}

bool reports(const ValidationReport& r, const std::string& check) {
  for (const Issue& i : r.issues)
    if (i.check == check) return true;
  return false;
}

// Floating-point references working on the Cartesian placement.
double cross(Point2 o, Point2 a, Point2 b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

Point2 place(const Triple& c, double denom) {
  return {(0.5 * static_cast<double>(c[0]) + static_cast<double>(c[2])) / denom,
          std::sqrt(3.0) / 2.0 * static_cast<double>(c[0]) / denom};
}

bool strictly_inside(Point2 p, Point2 a, Point2 b, Point2 c) {
  const double s1 = cross(a, b, p), s2 = cross(b, c, p), s3 = cross(c, a, p);
  const double eps = 1e-12;
  return (s1 > eps && s2 > eps && s3 > eps) || (s1 < -eps && s2 < -eps && s3 < -eps);
}

bool proper_cross(Point2 a, Point2 b, Point2 c, Point2 d) {
  const double eps = 1e-12;
  const double d1 = cross(a, b, c), d2 = cross(a, b, d), d3 = cross(c, d, a), d4 = cross(c, d, b);
  return ((d1 > eps && d2 < -eps) || (d1 < -eps && d2 > eps)) &&
         ((d3 > eps && d4 < -eps) || (d3 < -eps && d4 > eps));
}

std::size_t float_crossings(const Triangulation& t, const Drawing& d) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < static_cast<VertexId>(t.n()); ++u)
    for (VertexId v : t.neighbors(u))
      if (u < v) edges.emplace_back(u, v);
  const double D = static_cast<double>(d.denom);
  std::size_t count = 0;
  for (std::size_t e = 0; e < edges.size(); ++e)
    for (std::size_t f = e + 1; f < edges.size(); ++f) {
      const auto [a, b] = edges[e];
      const auto [c, dd] = edges[f];
      if (a == c || a == dd || b == c || b == dd) continue;
      count += proper_cross(place(d.coords[a], D), place(d.coords[b], D), place(d.coords[c], D),
                            place(d.coords[dd], D));
    }
  return count;
}

}  // namespace

TEST_CASE("orientation of the outer triangle is counterclockwise") {
  const Triple a1{1, 0, 0}, a2{0, 1, 0}, a3{0, 0, 1};
  CHECK(orientation(a1, a2, a3) == 1);
  CHECK(orientation(a1, a3, a2) == -1);
  CHECK(orientation(Triple{2, 0, 0}, Triple{1, 1, 0}, Triple{0, 2, 0}) == 0);
  const std::int64_t big = std::int64_t{1} << 40;
  CHECK(orientation(Triple{big, 0, 0}, Triple{0, big, 0}, Triple{0, 0, big}) == 1);
}

TEST_CASE("segments_intersect") {
  const Triple p{2, 0, 0}, q{0, 2, 0}, r{0, 0, 2}, m{1, 1, 0};
  CHECK(segments_intersect(p, q, m, r));    // touching at m
  CHECK_FALSE(segments_intersect(p, r, q, Triple{0, 1, 1}));
  CHECK(segments_intersect(p, q, m, Triple{0, 2, 0}));  // collinear overlap
  CHECK(segments_intersect(p, Triple{0, 1, 1}, q, Triple{1, 0, 1}));
}

TEST_CASE("three-wedge examples") {
  const Built k = build(k4());
  CHECK(diff(k.d, kU, kA1) == Triple{2, -1, -1});
  CHECK(validate_three_wedge(k.t, k.r, k.d).ok());

  const Built t = build(t5());
  CHECK(t.r.parent[kV][2] == kU);
  CHECK(diff(t.d, kV, kU) == Triple{-1, -1, 2});
  CHECK(validate_three_wedge(t.t, t.r, t.d).ok());

  Drawing swapped = t.d;
  std::swap(swapped.coords[kU], swapped.coords[kV]);
  const ValidationReport rep = validate_three_wedge(t.t, t.r, swapped);
  CHECK(reports(rep, "three_wedge"));
}

TEST_CASE("three-wedge and enclosing triangle hold on random instances") {
  for (std::size_t n : {5u, 12u, 40u, 150u}) {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const Built b = build(randomize_flips(generate_stacked(n, seed), 10 * n, seed));
      CHECK(validate_three_wedge(b.t, b.r, b.d).ok());
      CHECK(validate_enclosing_triangle(b.t, b.r, b.d).ok());
    }
  }
}

TEST_CASE("a vertex planted inside an edge triangle is reported") {
  const Built b = build(randomize_flips(generate_stacked(30, 4), 300, 4));
  // Scaling leaves every predicate unchanged but makes room for lattice points.
  Drawing scaled = b.d;
  scaled.denom *= 8;
  for (auto& c : scaled.coords)
    for (auto& x : c) x *= 8;
  REQUIRE(validate_enclosing_triangle(b.t, b.r, scaled).ok());

  const double D = static_cast<double>(scaled.denom);
  std::size_t planted = 0;
  for (VertexId u = 3; u < static_cast<VertexId>(b.t.n()) && planted < 10; ++u) {
    for (int i = 0; i < 3 && planted < 10; ++i) {
      const VertexId v = b.r.parent[u][i];
      const Triple& cu = scaled.coords[u];
      const Triple& cv = scaled.coords[v];
      const int a = tree_succ(i), c = tree_pred(i);
      // Corners of the region {w_i < v_i, w_a < u_a, w_c < u_c}.
      Triple p1, p2, p3;
      p1[i] = cv[i], p1[a] = cu[a], p1[c] = scaled.denom - cv[i] - cu[a];
      p2[i] = cv[i], p2[c] = cu[c], p2[a] = scaled.denom - cv[i] - cu[c];
      p3[a] = cu[a], p3[c] = cu[c], p3[i] = scaled.denom - cu[a] - cu[c];
      Triple w{};
      bool found = false;
      for (std::int64_t x = 0; x < cv[i] && !found; ++x)
        for (std::int64_t y = 0; y < cu[a] && !found; ++y) {
          const std::int64_t z = scaled.denom - x - y;
          if (z >= 0 && z < cu[c]) {
            w[i] = x, w[a] = y, w[c] = z;
            found = true;
          }
        }
      if (!found) continue;
      REQUIRE(strictly_inside(place(w, D), place(p1, D), place(p2, D), place(p3, D)));

      VertexId victim = kNoVertex;
      for (VertexId x = 3; x < static_cast<VertexId>(b.t.n()); ++x)
        if (x != u && x != v) victim = x;
      Drawing moved = scaled;
      moved.coords[victim] = w;
      bool named = false;
      for (const Issue& is : validate_enclosing_triangle(b.t, b.r, moved).issues)
        named |= is.check == "enclosing_triangle" && is.vertices == std::vector<VertexId>{u, v, victim};
      CHECK(named);
      ++planted;
    }
  }
  CHECK(planted > 0);
}

TEST_CASE("planarity") {
  const Built k = build(k4());
  CHECK(validate_planarity(k.t, k.d).ok());
  const Built t = build(t5());
  CHECK(validate_planarity(t.t, t.d).ok());

  Drawing moved = t.d;
  moved.coords[kV] = Triple{4, 0, 1};
  CHECK(float_crossings(t.t, moved) > 0);
  CHECK(reports(validate_planarity(t.t, moved), "planarity"));

  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Built b = build(randomize_flips(generate_stacked(40, seed), 400, seed));
    CHECK(validate_planarity(b.t, b.d).ok());
    CHECK(float_crossings(b.t, b.d) == 0);
  }
}

TEST_CASE("overlapping edges at a shared endpoint are caught") {
  const Built t = build(t5());
  // u and v on one ray out of A2, so edges A2-u and A2-v overlap.
  Drawing d;
  d.denom = 10;
  d.coords = {Triple{10, 0, 0}, Triple{0, 10, 0}, Triple{0, 0, 10}, Triple{2, 6, 2}, Triple{4, 2, 4}};
  CHECK(orientation(d.coords[kA2], d.coords[kU], d.coords[kV]) == 0);
  CHECK(reports(validate_planarity(t.t, d), "planarity"));
}
