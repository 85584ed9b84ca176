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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgr/drawing.hpp"
#include "sgr/triangulation.hpp"
#include "sgr/vrac.hpp"

namespace sgr {

enum class Strategy {
  /// Sector routing over the saturated graph; even sectors and corners use
  /// the upright-triangle distance max_m (w_m - t_m).
  kSectorGreedy,
  /// Sector routing whose even-sector step only considers the two adjacent
  /// saturated edges (fewest overshooting coordinates, then lower tree) and
  /// whose corner step minimises the number of differing coordinates. Known
  /// to fail; kept for its counterexamples.
  kSectorGreedyAdjacentOnly,
  /// Classic greedy: strictly closest neighbour in Euclidean distance.
  kEuclideanGreedy,
};

std::string_view to_string(Strategy s);
/// Accepts "sector", "sector-adjacent", "euclidean".
std::optional<Strategy> parse_strategy(std::string_view name);

enum class Tier { kNeighborDelivery, kOddSector, kEvenSector, kCorner, kEuclidean };
std::string_view to_string(Tier t);

enum class Outcome { kDelivered, kStuck, kLoopDetected, kHopBudgetExceeded };
std::string_view to_string(Outcome o);

struct Neighbor {
  VertexId id = kNoVertex;
  Triple coords{};
};

/// Everything the sector rule may look at when standing on one vertex.
struct LocalView {
  VertexId self = kNoVertex;
  Triple coords{};
  std::vector<Neighbor> neighbors;
  /// Saturated edges per odd sector; kNoVertex at corners.
  std::array<VertexId, 3> sat{kNoVertex, kNoVertex, kNoVertex};
};

LocalView local_view(const Triangulation& t, const Drawing& d, const SaturatedGraph& sg, VertexId u);

struct HopChoice {
  VertexId next = kNoVertex;  // kNoVertex: stuck
  Tier tier = Tier::kNeighborDelivery;
  std::optional<SectorId> sector;
};

/// Upright-triangle distance from w to target: max_m (w_m - target_m).
std::int64_t triangle_distance(const Triple& w, const Triple& target);

/// One sector-routing decision:
///  (i)   target adjacent: deliver;
///  (ii)  classify the target's sector s_j around the current vertex;
///  (iii) j odd: follow the saturated edge of s_j;
///  (iv)  j even: among the two adjacent saturated edges and the neighbours
///        lying in s_j, the one of least triangle distance (lowest id on
///        ties), provided it is strictly smaller than the current one;
///  (v)   corner: the neighbour of least triangle distance, same proviso.
/// kSectorGreedyAdjacentOnly swaps (iv) and (v) for the adjacent-only rule.
HopChoice next_hop_sector(const LocalView& here, VertexId target, const Triple& target_coords,
                          Strategy strategy = Strategy::kSectorGreedy);

/// Four times denom^2 times the squared Euclidean distance; exact.
std::int64_t scaled_squared_distance(const Triple& a, const Triple& b);

/// Strictly closest neighbour to the target if it beats the current vertex.
HopChoice next_hop_euclidean(const Triangulation& t, const Drawing& d, VertexId u, VertexId target);

struct HopDecision {
  VertexId from = kNoVertex;
  HopChoice choice;
};

struct RouteTrace {
  VertexId source = kNoVertex;
  VertexId destination = kNoVertex;
  std::vector<VertexId> hops;
  std::vector<HopDecision> decisions;
  Outcome outcome = Outcome::kStuck;

  bool delivered() const { return outcome == Outcome::kDelivered; }
  std::size_t hop_count() const { return hops.empty() ? 0 : hops.size() - 1; }
};

/// Routing inputs bundled; `sg` may be null for Euclidean routing.
struct RoutingGraph {
  const Triangulation& t;
  const Drawing& d;
  const SaturatedGraph* sg = nullptr;
};

/// Forwards until delivery, a stuck vertex, a repeated vertex, or more than
/// max_hops hops (0 means n). Throws std::invalid_argument if source ==
/// destination or ids are out of range.
RouteTrace route(const RoutingGraph& g, VertexId source, VertexId destination, Strategy strategy,
                 std::size_t max_hops = 0);

struct DeliveryReport {
  std::string instance;
  Strategy strategy = Strategy::kSectorGreedy;
  std::size_t n = 0;
  std::size_t pairs_tested = 0;
  std::size_t delivered = 0;
  std::size_t failed = 0;
  std::size_t max_hops = 0;
  double mean_hops = 0.0;    // over delivered routes
  double max_stretch = 0.0;  // hops / BFS distance over delivered routes
  /// Delivered routes that repeat a vertex or exceed n - 1 hops.
  std::size_t non_simple_delivered = 0;
  /// Euclidean only: delivered routes with a hop that does not strictly
  /// decrease the distance to the destination.
  std::size_t distance_audit_failures = 0;
  /// Full traces of undelivered routes sorted by (source, destination).
  std::vector<RouteTrace> failures;

  double delivery_rate() const {
    return pairs_tested == 0 ? 1.0 : static_cast<double>(delivered) / static_cast<double>(pairs_tested);
  }
};

/// Hop distances from every vertex (BFS on the triangulation).
std::vector<std::vector<int>> all_pairs_bfs(const Triangulation& t);

/// Routes every ordered pair. Parallel over sources when threads != 1
/// (0 = hardware concurrency); the report does not depend on the schedule.
DeliveryReport verify_all_pairs(const RoutingGraph& g, Strategy strategy, std::string instance,
                                unsigned threads = 1);

}  // namespace sgr
