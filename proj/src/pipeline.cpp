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

#include "sgr/pipeline.hpp"

#include <fmt/format.h>

#include "sgr/generate.hpp"

namespace sgr {

Triangulation generate_instance(std::size_t n, std::size_t flips, std::uint64_t seed) {
  return randomize_flips(generate_stacked(n, seed), flips, seed);
}

std::string instance_descriptor(std::size_t n, std::size_t flips, std::uint64_t seed) {
  return fmt::format("stacked(n={},seed={})+flips({})", n, seed, flips);
}

Instance make_instance(std::string descriptor, Triangulation t) {
  Realizer r = compute_realizer(t);
  Drawing d = compute_drawing(t, r);
  SaturatedGraph sg = extract_saturated(t, d);
  return Instance{std::move(descriptor), std::move(t), std::move(r), std::move(d), std::move(sg)};
}

ComparisonReport compare_strategies(const std::vector<Instance>& instances, unsigned threads) {
  ComparisonReport report;
  for (const Instance& inst : instances) {
    ComparisonRow row{verify_all_pairs(inst.graph(), Strategy::kSectorGreedy, inst.descriptor, threads),
                      verify_all_pairs(inst.graph(), Strategy::kEuclideanGreedy, inst.descriptor, threads)};
    report.pairs += row.sector.pairs_tested;
    report.sector_delivered += row.sector.delivered;
    report.euclidean_delivered += row.euclidean.delivered;
    report.euclidean_audit_failures += row.euclidean.distance_audit_failures;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace sgr
