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

#include "sgr/vrac.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace sgr {

namespace {

std::string describe(const std::vector<SaturationProblem>& problems) {
  if (problems.empty()) return "saturation failed";
  const auto& p = problems.front();
  return fmt::format("{} problem(s); first: {} at vertex {} sector s{}", problems.size(),
                     p.kind == SaturationProblem::Kind::kEmptySector ? "EmptySector"
                                                                     : "NoUniqueMinimum",
                     p.u, 2 * p.k - 1);
}

// v precedes w in the dominance order of odd sector with primary index i.
bool precedes(const Triple& v, const Triple& w, int i) {
  return v[i] <= w[i] && v[tree_succ(i)] >= w[tree_succ(i)] && v[tree_pred(i)] >= w[tree_pred(i)];
}

}  // namespace

SaturationError::SaturationError(std::vector<SaturationProblem> problems)
    : std::runtime_error(describe(problems)), problems_(std::move(problems)) {}

SignTriple sign_triple(const Triple& u, const Triple& v) {
  if (u == v) throw CoordinateError("sign triple of identical coordinates");
  SignTriple out;
  for (int k = 0; k < 3; ++k) out.s[k] = (v[k] > u[k]) - (v[k] < u[k]);
  return out;
}

SectorId classify_sector(const Triple& u, const Triple& t) {
  const SignTriple s = sign_triple(u, t);
  // Exactly one strictly positive or exactly one strictly negative sign
  // decides the sector; zeros join the odd sector of the lone positive sign.
  int pos = 0;
  int zero = 0;
  for (int k = 0; k < 3; ++k) {
    pos += s[k] > 0;
    zero += s[k] == 0;
  }
  if (zero > 0) {
    for (int k = 0; k < 3; ++k)
      if (s[k] > 0) return {2 * k + 1, true};
  }
  if (pos == 1) {
    for (int k = 0; k < 3; ++k)
      if (s[k] > 0) return {2 * k + 1, false};
  }
  // Two positives, one negative: s2 (+,+,-), s4 (-,+,+), s6 (+,-,+).
  static constexpr int kEvenByNegative[3] = {4, 6, 2};
  for (int k = 0; k < 3; ++k)
    if (s[k] < 0) return {kEvenByNegative[k], false};
  throw CoordinateError("unreachable sign pattern");
}

VertexId least_in_sector(const std::vector<SectorCandidate>& candidates, int k) {
  const int i = k - 1;
  for (const auto& v : candidates) {
    bool below_all = true;
    for (const auto& w : candidates) {
      if (w.id != v.id && !precedes(v.coords, w.coords, i)) {
        below_all = false;
        break;
      }
    }
    if (below_all) return v.id;
  }
  return kNoVertex;
}

SaturatedGraph extract_saturated(const Triangulation& t, const Drawing& d) {
  const std::size_t n = t.n();
  SaturatedGraph sg;
  sg.sat.assign(n, {kNoVertex, kNoVertex, kNoVertex});
  std::vector<SaturationProblem> problems;

  for (std::size_t ui = 3; ui < n; ++ui) {
    const auto u = static_cast<VertexId>(ui);
    std::array<std::vector<VertexId>, 3> bucket;
    for (VertexId w : t.neighbors(u)) {
      const SectorId s = classify_sector(d.coords[u], d.coords[w]);
      if (s.boundary) sg.boundary_hits.push_back({u, w, s});
      if (s.odd()) bucket[(s.value - 1) / 2].push_back(w);
    }
    for (int i = 0; i < 3; ++i) {
      const auto& cands = bucket[i];
      if (cands.empty()) {
        problems.push_back({SaturationProblem::Kind::kEmptySector, u, i + 1, {}});
        continue;
      }
      std::vector<SectorCandidate> pts;
      for (VertexId v : cands) pts.push_back({v, d.coords[v]});
      const VertexId least = least_in_sector(pts, i + 1);
      if (least == kNoVertex) {
        problems.push_back({SaturationProblem::Kind::kNoUniqueMinimum, u, i + 1, cands});
      } else {
        sg.sat[u][i] = least;
      }
    }
  }
  if (!problems.empty()) throw SaturationError(std::move(problems));
  return sg;
}

ValidationReport check_saturated(const Triangulation& t, const SaturatedGraph& sg) {
  ValidationReport report;
  const std::size_t n = t.n();
  if (sg.sat.size() != n) {
    report.fail("shape", fmt::format("saturated graph has {} rows for {} vertices", sg.sat.size(), n));
    return report;
  }
  for (std::size_t ui = 0; ui < n; ++ui) {
    const auto u = static_cast<VertexId>(ui);
    for (int k = 1; k <= 3; ++k) {
      const VertexId v = sg.at(u, k);
      if (is_corner(u)) {
        if (v != kNoVertex) {
          report.fail("corner", fmt::format("corner A{} has a retained edge in s{}", u + 1, 2 * k - 1),
                      {u});
        }
        continue;
      }
      if (v == kNoVertex) {
        report.fail("one_per_sector", fmt::format("vertex {} has no retained edge in s{}", u, 2 * k - 1),
                    {u});
      } else if (v < 0 || static_cast<std::size_t>(v) >= n || !t.adjacent(u, v)) {
        report.fail("subgraph",
                    fmt::format("retained edge {}-{} (s{}) is not a triangulation edge", u, v, 2 * k - 1),
                    {u, v});
      }
    }
    if (!is_corner(u)) {
      const auto& s = sg.sat[ui];
      if ((s[0] != kNoVertex && (s[0] == s[1] || s[0] == s[2])) ||
          (s[1] != kNoVertex && s[1] == s[2])) {
        report.fail("one_per_sector",
                    fmt::format("vertex {} retains the same edge in two sectors", u), {u});
      }
    }
  }
  return report;
}

SaturationDiff saturated_equals_realizer(const SaturatedGraph& sg, const Realizer& r) {
  SaturationDiff diff;
  const std::size_t n = std::min(sg.sat.size(), r.parent.size());
  if (sg.sat.size() != r.parent.size()) diff.equal = false;
  for (std::size_t ui = 3; ui < n; ++ui) {
    for (int k = 1; k <= 3; ++k) {
      const VertexId s = sg.sat[ui][k - 1];
      const VertexId p = r.parent[ui][k - 1];
      if (s != p) {
        diff.equal = false;
        diff.mismatches.push_back({static_cast<VertexId>(ui), k, s, p});
      }
    }
  }
  return diff;
}

}  // namespace sgr
