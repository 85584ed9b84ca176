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

#include "sgr/routing.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>

namespace sgr {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::kSectorGreedy: return "sector";
    case Strategy::kSectorGreedyAdjacentOnly: return "sector-adjacent";
    case Strategy::kEuclideanGreedy: return "euclidean";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  for (Strategy s : {Strategy::kSectorGreedy, Strategy::kSectorGreedyAdjacentOnly,
                     Strategy::kEuclideanGreedy}) {
    if (name == to_string(s)) return s;
  }
  return std::nullopt;
}

std::string_view to_string(Tier t) {
  switch (t) {
    case Tier::kNeighborDelivery: return "neighbor";
    case Tier::kOddSector: return "odd_sector";
    case Tier::kEvenSector: return "even_sector";
    case Tier::kCorner: return "corner";
    case Tier::kEuclidean: return "euclidean";
  }
  return "?";
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::kDelivered: return "Delivered";
    case Outcome::kStuck: return "Stuck";
    case Outcome::kLoopDetected: return "LoopDetected";
    case Outcome::kHopBudgetExceeded: return "HopBudgetExceeded";
  }
  return "?";
}

LocalView local_view(const Triangulation& t, const Drawing& d, const SaturatedGraph& sg, VertexId u) {
  LocalView view;
  view.self = u;
  view.coords = d.coords[u];
  view.neighbors.reserve(t.degree(u));
  for (VertexId w : t.neighbors(u)) view.neighbors.push_back({w, d.coords[w]});
  view.sat = sg.sat[u];
  return view;
}

std::int64_t triangle_distance(const Triple& w, const Triple& target) {
  return std::max({w[0] - target[0], w[1] - target[1], w[2] - target[2]});
}

namespace {

const Neighbor* find_neighbor(const LocalView& here, VertexId id) {
  for (const Neighbor& nb : here.neighbors)
    if (nb.id == id) return &nb;
  return nullptr;
}

// Least triangle distance among `cands`, lowest id on ties; stuck unless it
// beats the current vertex.
VertexId closest_by_triangle(const LocalView& here, const std::vector<const Neighbor*>& cands,
                             const Triple& target) {
  const Neighbor* best = nullptr;
  std::int64_t best_d = 0;
  for (const Neighbor* nb : cands) {
    const std::int64_t dist = triangle_distance(nb->coords, target);
    if (best == nullptr || dist < best_d || (dist == best_d && nb->id < best->id)) {
      best = nb;
      best_d = dist;
    }
  }
  if (best == nullptr || best_d >= triangle_distance(here.coords, target)) return kNoVertex;
  return best->id;
}

// Coordinates in which `v` ends up on the other side of the target than `u`.
int overshoot(const Triple& u, const Triple& v, const Triple& target) {
  int count = 0;
  for (int m = 0; m < 3; ++m) {
    const int from_u = (target[m] > u[m]) - (target[m] < u[m]);
    const int from_v = (target[m] > v[m]) - (target[m] < v[m]);
    if (from_v != 0 && from_v == -from_u) ++count;
  }
  return count;
}

HopChoice adjacent_only_even(const LocalView& here, int sector, const Triple& target) {
  const int i = sector / 2;  // s_{2i} lies between s_{2i-1} and s_{2i+1}
  const std::array<int, 2> ks{i, i % 3 + 1};
  HopChoice choice{kNoVertex, Tier::kEvenSector, std::nullopt};
  int best_over = 4;
  for (int k : ks) {
    const VertexId v = here.sat[k - 1];
    const Neighbor* nb = find_neighbor(here, v);
    if (nb == nullptr || nb->coords == target) continue;
    // Rejected when the target sits in the sector opposite the one the
    // candidate was reached through.
    const SectorId back = classify_sector(nb->coords, target);
    if (back.value == opposite_sector(2 * k - 1)) continue;
    const int over = overshoot(here.coords, nb->coords, target);
    if (over < best_over) {
      best_over = over;
      choice.next = v;
    }
  }
  return choice;
}

HopChoice adjacent_only_corner(const LocalView& here, const Triple& target) {
  HopChoice choice{kNoVertex, Tier::kCorner, std::nullopt};
  int best = 4;
  for (const Neighbor& nb : here.neighbors) {
    int differing = 0;
    for (int m = 0; m < 3; ++m) differing += nb.coords[m] != target[m];
    if (differing < best || (differing == best && nb.id < choice.next)) {
      best = differing;
      choice.next = nb.id;
    }
  }
  return choice;
}

}  // namespace

HopChoice next_hop_sector(const LocalView& here, VertexId target, const Triple& target_coords,
                          Strategy strategy) {
  if (strategy == Strategy::kEuclideanGreedy) {
    throw std::invalid_argument("next_hop_sector called with the Euclidean strategy");
  }
  if (here.self == target) throw std::invalid_argument("next_hop_sector: already at the target");

  if (find_neighbor(here, target) != nullptr) return {target, Tier::kNeighborDelivery, std::nullopt};

  const bool corner = here.sat[0] == kNoVertex;
  if (corner) {
    if (strategy == Strategy::kSectorGreedyAdjacentOnly) return adjacent_only_corner(here, target_coords);
    std::vector<const Neighbor*> all;
    for (const Neighbor& nb : here.neighbors) all.push_back(&nb);
    return {closest_by_triangle(here, all, target_coords), Tier::kCorner, std::nullopt};
  }

  const SectorId sector = classify_sector(here.coords, target_coords);
  if (sector.odd()) {
    return {here.sat[(sector.value - 1) / 2], Tier::kOddSector, sector};
  }

  HopChoice choice;
  if (strategy == Strategy::kSectorGreedyAdjacentOnly) {
    choice = adjacent_only_even(here, sector.value, target_coords);
  } else {
    const int i = sector.value / 2;
    std::vector<const Neighbor*> cands;
    for (int k : {i, i % 3 + 1}) {
      if (const Neighbor* nb = find_neighbor(here, here.sat[k - 1])) cands.push_back(nb);
    }
    for (const Neighbor& nb : here.neighbors) {
      if (classify_sector(here.coords, nb.coords).value == sector.value) cands.push_back(&nb);
    }
    choice.next = closest_by_triangle(here, cands, target_coords);
    choice.tier = Tier::kEvenSector;
  }
  choice.sector = sector;
  return choice;
}

std::int64_t scaled_squared_distance(const Triple& a, const Triple& b) {
  // x = (x1/2 + x3) / D, y = (sqrt(3)/2) x1 / D.
  const std::int64_t d1 = a[0] - b[0];
  const std::int64_t d3 = a[2] - b[2];
  const std::int64_t dx = d1 + 2 * d3;
  return dx * dx + 3 * d1 * d1;
}

HopChoice next_hop_euclidean(const Triangulation& t, const Drawing& d, VertexId u, VertexId target) {
  if (u == target) throw std::invalid_argument("next_hop_euclidean: already at the target");
  const Triple& goal = d.coords[target];
  std::int64_t best = scaled_squared_distance(d.coords[u], goal);
  VertexId next = kNoVertex;
  for (VertexId w : t.neighbors(u)) {
    const std::int64_t dist = scaled_squared_distance(d.coords[w], goal);
    if (dist < best || (dist == best && next != kNoVertex && w < next)) {
      best = dist;
      next = w;
    }
  }
  return {next, Tier::kEuclidean, std::nullopt};
}

RouteTrace route(const RoutingGraph& g, VertexId source, VertexId destination, Strategy strategy,
                 std::size_t max_hops) {
  const std::size_t n = g.t.n();
  auto in_range = [n](VertexId v) { return v >= 0 && static_cast<std::size_t>(v) < n; };
  if (!in_range(source) || !in_range(destination)) {
    throw std::invalid_argument(fmt::format("route: vertex out of range ({} -> {})", source, destination));
  }
  if (source == destination) throw std::invalid_argument("route: source equals destination");
  if (strategy != Strategy::kEuclideanGreedy && g.sg == nullptr) {
    throw std::invalid_argument("route: sector routing needs a saturated graph");
  }
  if (max_hops == 0) max_hops = n;

  RouteTrace trace;
  trace.source = source;
  trace.destination = destination;
  trace.hops.push_back(source);
  std::vector<char> visited(n, 0);
  visited[source] = 1;

  VertexId u = source;
  while (true) {
    if (trace.hop_count() >= max_hops) {
      trace.outcome = Outcome::kHopBudgetExceeded;
      break;
    }
    HopChoice choice;
    if (strategy == Strategy::kEuclideanGreedy) {
      choice = next_hop_euclidean(g.t, g.d, u, destination);
    } else {
      choice = next_hop_sector(local_view(g.t, g.d, *g.sg, u), destination, g.d.coords[destination],
                               strategy);
    }
    trace.decisions.push_back({u, choice});
    if (choice.next == kNoVertex) {
      trace.outcome = Outcome::kStuck;
      break;
    }
    trace.hops.push_back(choice.next);
    if (choice.next == destination) {
      trace.outcome = Outcome::kDelivered;
      break;
    }
    if (visited[choice.next]) {
      trace.outcome = Outcome::kLoopDetected;
      break;
    }
    visited[choice.next] = 1;
    u = choice.next;
  }
  return trace;
}

std::vector<std::vector<int>> all_pairs_bfs(const Triangulation& t) {
  const std::size_t n = t.n();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  std::vector<VertexId> queue(n);
  for (std::size_t s = 0; s < n; ++s) {
    auto& row = dist[s];
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = static_cast<VertexId>(s);
    row[s] = 0;
    while (head < tail) {
      const VertexId u = queue[head++];
      for (VertexId w : t.neighbors(u)) {
        if (row[w] < 0) {
          row[w] = row[u] + 1;
          queue[tail++] = w;
        }
      }
    }
  }
  return dist;
}

namespace {

struct SourceTally {
  std::size_t delivered = 0;
  std::size_t hop_sum = 0;
  std::size_t max_hops = 0;
  // Stretch kept as an exact fraction hops / bfs.
  std::size_t stretch_num = 0;
  std::size_t stretch_den = 1;
  std::size_t non_simple = 0;
  std::size_t audit = 0;
  std::vector<RouteTrace> failures;
};

bool is_simple(const RouteTrace& tr, std::size_t n) {
  if (tr.hop_count() > n - 1) return false;
  std::vector<VertexId> sorted = tr.hops;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool strictly_decreasing(const RouteTrace& tr, const Drawing& d) {
  const Triple& goal = d.coords[tr.destination];
  for (std::size_t k = 1; k < tr.hops.size(); ++k) {
    if (scaled_squared_distance(d.coords[tr.hops[k]], goal) >=
        scaled_squared_distance(d.coords[tr.hops[k - 1]], goal)) {
      return false;
    }
  }
  return true;
}

}  // namespace

DeliveryReport verify_all_pairs(const RoutingGraph& g, Strategy strategy, std::string instance,
                                unsigned threads) {
  const std::size_t n = g.t.n();
  const auto bfs = all_pairs_bfs(g.t);
  std::vector<SourceTally> tallies(n);

  auto run_source = [&](std::size_t s) {
    SourceTally& tally = tallies[s];
    for (std::size_t dst = 0; dst < n; ++dst) {
      if (dst == s) continue;
      RouteTrace tr = route(g, static_cast<VertexId>(s), static_cast<VertexId>(dst), strategy);
      if (!tr.delivered()) {
        tally.failures.push_back(std::move(tr));
        continue;
      }
      ++tally.delivered;
      const std::size_t hops = tr.hop_count();
      tally.hop_sum += hops;
      tally.max_hops = std::max(tally.max_hops, hops);
      const auto shortest = static_cast<std::size_t>(bfs[s][dst]);
      if (hops * tally.stretch_den > tally.stretch_num * shortest) {
        tally.stretch_num = hops;
        tally.stretch_den = shortest;
      }
      if (!is_simple(tr, n)) ++tally.non_simple;
      if (strategy == Strategy::kEuclideanGreedy && !strictly_decreasing(tr, g.d)) ++tally.audit;
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (threads <= 1 || n < 8) {
    for (std::size_t s = 0; s < n; ++s) run_source(s);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t s = w; s < n; s += threads) run_source(s);
      });
    }
    for (auto& th : pool) th.join();
  }

  DeliveryReport report;
  report.instance = std::move(instance);
  report.strategy = strategy;
  report.n = n;
  report.pairs_tested = n * (n - 1);
  std::size_t hop_sum = 0;
  std::size_t stretch_num = 0;
  std::size_t stretch_den = 1;
  for (auto& tally : tallies) {
    report.delivered += tally.delivered;
    hop_sum += tally.hop_sum;
    report.max_hops = std::max(report.max_hops, tally.max_hops);
    if (tally.stretch_num * stretch_den > stretch_num * tally.stretch_den) {
      stretch_num = tally.stretch_num;
      stretch_den = tally.stretch_den;
    }
    report.non_simple_delivered += tally.non_simple;
    report.distance_audit_failures += tally.audit;
    for (auto& f : tally.failures) report.failures.push_back(std::move(f));
  }
  report.failed = report.pairs_tested - report.delivered;
  report.mean_hops = report.delivered == 0
                         ? 0.0
                         : static_cast<double>(hop_sum) / static_cast<double>(report.delivered);
  report.max_stretch = static_cast<double>(stretch_num) / static_cast<double>(stretch_den);
  return report;
}

}  // namespace sgr
