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

#include "doctest.h"
#include "fixtures.hpp"
#include "sgr/generate.hpp"
#include "sgr/pipeline.hpp"
#include "sgr/routing.hpp"

using namespace sgr;
using namespace sgr::testing;

namespace {

bool same_report(const DeliveryReport& a, const DeliveryReport& b) {
  if (a.pairs_tested != b.pairs_tested || a.delivered != b.delivered || a.failed != b.failed ||
      a.max_hops != b.max_hops || a.mean_hops != b.mean_hops || a.max_stretch != b.max_stretch ||
      a.failures.size() != b.failures.size())
    return false;
  for (std::size_t k = 0; k < a.failures.size(); ++k) {
    if (a.failures[k].source != b.failures[k].source || a.failures[k].hops != b.failures[k].hops)
      return false;
  }
  return true;
}

Instance random_instance(std::size_t n, std::size_t flips, std::uint64_t seed) {
  return make_instance(instance_descriptor(n, flips, seed), generate_instance(n, flips, seed));
}

}  // namespace

TEST_CASE("single hops on T5 and K4") {
  const Instance t = make_instance("T5", t5());
  const LocalView at_v = local_view(t.t, t.d, t.sg, kV);
  const HopChoice h = next_hop_sector(at_v, kA3, t.d.coords[kA3]);
  CHECK(h.next == kU);
  CHECK(h.tier == Tier::kOddSector);
  REQUIRE(h.sector.has_value());
  CHECK(h.sector->value == 5);

  const HopChoice d = next_hop_sector(local_view(t.t, t.d, t.sg, kU), kA3, t.d.coords[kA3]);
  CHECK(d.next == kA3);
  CHECK(d.tier == Tier::kNeighborDelivery);

  const Instance k = make_instance("K4", k4());
  const HopChoice c = next_hop_sector(local_view(k.t, k.d, k.sg, kA1), kA2, k.d.coords[kA2]);
  CHECK(c.next == kA2);
  CHECK(c.tier == Tier::kNeighborDelivery);

  CHECK_THROWS(next_hop_sector(at_v, kV, t.d.coords[kV]));
  CHECK_THROWS(next_hop_sector(at_v, kA3, t.d.coords[kA3], Strategy::kEuclideanGreedy));
}

TEST_CASE("even sector and corner steps") {
  const Instance t = make_instance("T5", t5());
  // From u the vertex v lies in s2: a neighbour, so delivered directly.
  CHECK(next_hop_sector(local_view(t.t, t.d, t.sg, kU), kV, t.d.coords[kV]).next == kV);

  // A1 -> v is adjacent too; corners only route to non-neighbours in larger
  // instances, so walk every corner pair of a random instance.
  const Instance big = random_instance(40, 400, 11);
  for (VertexId c = 0; c < 3; ++c) {
    for (VertexId w = 3; w < 40; ++w) {
      if (big.t.adjacent(c, w)) continue;
      const HopChoice h = next_hop_sector(local_view(big.t, big.d, big.sg, c), w, big.d.coords[w]);
      REQUIRE(h.next != kNoVertex);
      CHECK(h.tier == Tier::kCorner);
      CHECK(triangle_distance(big.d.coords[h.next], big.d.coords[w]) <
            triangle_distance(big.d.coords[c], big.d.coords[w]));
    }
  }
}

TEST_CASE("triangle and euclidean distances") {
  CHECK(triangle_distance(Triple{5, 0, 0}, Triple{1, 1, 3}) == 4);
  CHECK(triangle_distance(Triple{1, 1, 3}, Triple{1, 1, 3}) == 0);
  // A2 to A3 is the unit side: 4 * D^2 * 1.
  CHECK(scaled_squared_distance(Triple{0, 5, 0}, Triple{0, 0, 5}) == 4 * 25);
  CHECK(scaled_squared_distance(Triple{5, 0, 0}, Triple{0, 5, 0}) == 4 * 25);
  CHECK(scaled_squared_distance(Triple{5, 0, 0}, Triple{0, 0, 5}) == 4 * 25);
}

TEST_CASE("euclidean next hop") {
  const Instance t = make_instance("T5", t5());
  const HopChoice h = next_hop_euclidean(t.t, t.d, kV, kA3);
  CHECK(h.next == kU);
  CHECK(h.tier == Tier::kEuclidean);

  // Somewhere in a batch of random drawings greedy gets stuck.
  bool stuck = false;
  for (std::uint64_t seed = 0; seed < 40 && !stuck; ++seed) {
    const Instance in = random_instance(40, 400, seed);
    for (VertexId s = 0; s < 40 && !stuck; ++s)
      for (VertexId d = 0; d < 40 && !stuck; ++d) {
        if (s == d) continue;
        const RouteTrace tr = route(in.graph(), s, d, Strategy::kEuclideanGreedy);
        if (tr.outcome == Outcome::kStuck) {
          stuck = true;
          const VertexId last = tr.hops.back();
          CHECK(next_hop_euclidean(in.t, in.d, last, d).next == kNoVertex);
          const auto here = scaled_squared_distance(in.d.coords[last], in.d.coords[d]);
          for (VertexId w : in.t.neighbors(last))
            CHECK(scaled_squared_distance(in.d.coords[w], in.d.coords[d]) >= here);
        }
      }
  }
  CHECK(stuck);
}

TEST_CASE("routes on T5") {
  const Instance t = make_instance("T5", t5());
  const RouteTrace tr = route(t.graph(), kV, kA3, Strategy::kSectorGreedy);
  CHECK(tr.delivered());
  CHECK(tr.hops == std::vector<VertexId>{kV, kU, kA3});
  CHECK(tr.hop_count() == 2);
  CHECK_THROWS_AS(route(t.graph(), kV, kV, Strategy::kSectorGreedy), std::invalid_argument);
  CHECK_THROWS_AS(route(t.graph(), kV, 9, Strategy::kSectorGreedy), std::invalid_argument);
}

TEST_CASE("all pairs on the smallest instances") {
  const Instance k = make_instance("K4", k4());
  const DeliveryReport rk = verify_all_pairs(k.graph(), Strategy::kSectorGreedy, "K4");
  CHECK(rk.pairs_tested == 12);
  CHECK(rk.delivered == 12);
  CHECK(rk.max_hops == 1);
  CHECK(rk.max_stretch == doctest::Approx(1.0));

  const Instance t = make_instance("T5", t5());
  const DeliveryReport rt = verify_all_pairs(t.graph(), Strategy::kSectorGreedy, "T5");
  CHECK(rt.pairs_tested == 20);
  CHECK(rt.delivered == 20);
  CHECK(rt.failures.empty());
  CHECK(rt.delivery_rate() == 1.0);
}

TEST_CASE("sector routing delivers everything on random instances") {
  for (std::size_t n : {6u, 20u, 60u}) {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const Instance in = random_instance(n, 10 * n, seed);
      const DeliveryReport r = verify_all_pairs(in.graph(), Strategy::kSectorGreedy, in.descriptor);
      CHECK_MESSAGE(r.delivered == n * (n - 1), in.descriptor);
      CHECK(r.non_simple_delivered == 0);
      CHECK(r.max_hops <= n - 1);
      const DeliveryReport e = verify_all_pairs(in.graph(), Strategy::kEuclideanGreedy, in.descriptor);
      CHECK(e.distance_audit_failures == 0);
    }
  }
}

TEST_CASE("decisions use only the local view") {
  // A synthetic view unrelated to any triangulation: the rule must work from
  // these fields alone.
  LocalView view;
  view.self = 100;
  view.coords = Triple{10, 10, 10};
  view.neighbors = {{101, Triple{14, 8, 8}}, {102, Triple{8, 14, 8}}, {103, Triple{8, 8, 14}},
                    {104, Triple{12, 12, 6}}};
  view.sat = {101, 102, 103};
  const HopChoice odd = next_hop_sector(view, 999, Triple{20, 5, 5});
  CHECK(odd.next == 101);
  CHECK(odd.tier == Tier::kOddSector);

  const HopChoice even = next_hop_sector(view, 999, Triple{14, 14, 2});
  CHECK(even.tier == Tier::kEvenSector);
  CHECK(even.next == 104);

  const HopChoice direct = next_hop_sector(view, 103, Triple{8, 8, 14});
  CHECK(direct.next == 103);
  CHECK(direct.tier == Tier::kNeighborDelivery);
}

TEST_CASE("parallel all-pairs is schedule independent") {
  const Instance in = random_instance(50, 500, 3);
  for (Strategy s : {Strategy::kSectorGreedy, Strategy::kEuclideanGreedy}) {
    const DeliveryReport one = verify_all_pairs(in.graph(), s, in.descriptor, 1);
    const DeliveryReport four = verify_all_pairs(in.graph(), s, in.descriptor, 4);
    CHECK(same_report(one, four));
  }
}

TEST_CASE("adjacent-only variant has replayable failures") {
  std::size_t failures = 0;
  for (std::uint64_t seed = 0; seed < 30 && failures == 0; ++seed) {
    const Instance in = random_instance(50, 500, seed);
    const DeliveryReport r =
        verify_all_pairs(in.graph(), Strategy::kSectorGreedyAdjacentOnly, in.descriptor);
    failures += r.failed;
    for (const RouteTrace& f : r.failures) {
      const RouteTrace again =
          route(in.graph(), f.source, f.destination, Strategy::kSectorGreedyAdjacentOnly);
      CHECK(again.hops == f.hops);
      CHECK(again.outcome == f.outcome);
      CHECK_FALSE(again.delivered());
    }
  }
  CHECK(failures > 0);
}

TEST_CASE("strategy names") {
  for (Strategy s : {Strategy::kSectorGreedy, Strategy::kSectorGreedyAdjacentOnly, Strategy::kEuclideanGreedy})
    CHECK(parse_strategy(to_string(s)) == s);
  CHECK_FALSE(parse_strategy("bogus").has_value());
}
