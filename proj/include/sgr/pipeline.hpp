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

#include <cstdint>
#include <string>
#include <vector>

#include "sgr/drawing.hpp"
#include "sgr/realizer.hpp"
#include "sgr/routing.hpp"
#include "sgr/triangulation.hpp"
#include "sgr/vrac.hpp"

namespace sgr {

/// A triangulation with its realizer, Schnyder drawing and saturated graph.
struct Instance {
  std::string descriptor;
  Triangulation t;
  Realizer r;
  Drawing d;
  SaturatedGraph sg;

  RoutingGraph graph() const { return {t, d, &sg}; }
};

/// Stacked triangulation on n vertices followed by `flips` flip attempts,
/// both driven by `seed`.
Triangulation generate_instance(std::size_t n, std::size_t flips, std::uint64_t seed);
std::string instance_descriptor(std::size_t n, std::size_t flips, std::uint64_t seed);

/// Throws RealizerError or SaturationError.
Instance make_instance(std::string descriptor, Triangulation t);

struct ComparisonRow {
  DeliveryReport sector;
  DeliveryReport euclidean;
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;
  std::size_t pairs = 0;
  std::size_t sector_delivered = 0;
  std::size_t euclidean_delivered = 0;
  std::size_t euclidean_audit_failures = 0;
};

/// Runs both strategies over every ordered pair of every instance.
ComparisonReport compare_strategies(const std::vector<Instance>& instances, unsigned threads = 1);

}  // namespace sgr
