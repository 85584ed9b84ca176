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

#include "sgr/reports.hpp"

#include <fmt/format.h>

namespace sgr {

namespace {

Json issues_json(const std::vector<Issue>& issues) {
  Json arr = Json::array();
  for (const Issue& i : issues) {
    arr.push_back({{"check", i.check}, {"message", i.message}, {"vertices", i.vertices}});
  }
  return arr;
}

Json triple_json(const Triple& c) { return Json::array({c[0], c[1], c[2]}); }

}  // namespace

Json to_json(const ValidationReport& report) {
  return {{"ok", report.ok()}, {"issues", issues_json(report.issues)}, {"notes", issues_json(report.notes)}};
}

Json to_json(const RouteTrace& trace) {
  Json decisions = Json::array();
  for (const HopDecision& d : trace.decisions) {
    Json entry{{"at", d.from},
               {"next", d.choice.next == kNoVertex ? Json(nullptr) : Json(d.choice.next)},
               {"tier", to_string(d.choice.tier)}};
    if (d.choice.sector) {
      entry["sector"] = d.choice.sector->value;
      entry["boundary"] = d.choice.sector->boundary;
    }
    decisions.push_back(std::move(entry));
  }
  return {{"source", trace.source},
          {"destination", trace.destination},
          {"hops", trace.hops},
          {"decisions", std::move(decisions)},
          {"outcome", to_string(trace.outcome)}};
}

Json to_json(const DeliveryReport& report, bool with_failures) {
  Json j{{"instance", report.instance},
         {"strategy", to_string(report.strategy)},
         {"n", report.n},
         {"pairs_tested", report.pairs_tested},
         {"delivered", report.delivered},
         {"failed", report.failed},
         {"delivery_rate", report.delivery_rate()},
         {"max_hops", report.max_hops},
         {"mean_hops", report.mean_hops},
         {"max_stretch", report.max_stretch},
         {"non_simple_delivered", report.non_simple_delivered},
         {"distance_audit_failures", report.distance_audit_failures}};
  if (with_failures) {
    Json failures = Json::array();
    for (const RouteTrace& tr : report.failures) failures.push_back(to_json(tr));
    j["failures"] = std::move(failures);
  }
  return j;
}

Json to_json(const ComparisonReport& report) {
  Json rows = Json::array();
  for (const ComparisonRow& row : report.rows) {
    rows.push_back({{"instance", row.sector.instance},
                    {"n", row.sector.n},
                    {"sector", to_json(row.sector, false)},
                    {"euclidean", to_json(row.euclidean, false)}});
  }
  const double pairs = report.pairs == 0 ? 1.0 : static_cast<double>(report.pairs);
  return {{"rows", std::move(rows)},
          {"aggregate",
           {{"instances", report.rows.size()},
            {"pairs", report.pairs},
            {"sector_delivered", report.sector_delivered},
            {"sector_rate", static_cast<double>(report.sector_delivered) / pairs},
            {"euclidean_delivered", report.euclidean_delivered},
            {"euclidean_rate", static_cast<double>(report.euclidean_delivered) / pairs},
            {"euclidean_audit_failures", report.euclidean_audit_failures}}}};
}

Json to_json(const Realizer& r) {
  Json rows = Json::array();
  for (std::size_t v = 3; v < r.parent.size(); ++v) {
    rows.push_back({{"v", v}, {"t1", r.parent[v][0]}, {"t2", r.parent[v][1]}, {"t3", r.parent[v][2]}});
  }
  return rows;
}

Json to_json(const Drawing& d) {
  Json coords = Json::array();
  for (const Triple& c : d.coords) coords.push_back(triple_json(c));
  return {{"denom", d.denom}, {"coords", std::move(coords)}};
}

Json to_json(const SaturatedGraph& sg) {
  Json rows = Json::array();
  for (std::size_t u = 3; u < sg.sat.size(); ++u) {
    rows.push_back({{"u", u}, {"sat", {sg.sat[u][0], sg.sat[u][1], sg.sat[u][2]}}});
  }
  Json hits = Json::array();
  for (const BoundaryHit& h : sg.boundary_hits) {
    hits.push_back({{"u", h.u}, {"w", h.w}, {"sector", h.sector.value}});
  }
  return {{"rows", std::move(rows)}, {"boundary_hits", std::move(hits)}};
}

Json counterexample_json(const std::string& descriptor, const Triangulation& t, const Drawing& d,
                         const SaturatedGraph* sg, Strategy strategy, const RouteTrace& trace) {
  Json j{{"instance", descriptor},
         {"n", t.n()},
         {"rotation", t.rotation()},
         {"drawing", to_json(d)},
         {"strategy", to_string(strategy)},
         {"trace", to_json(trace)}};
  j["saturated"] = sg != nullptr ? to_json(*sg) : Json(nullptr);
  return j;
}

std::string format_trace(const RouteTrace& trace) {
  std::string out = fmt::format("route {} -> {}: {}\n", trace.source, trace.destination,
                                to_string(trace.outcome));
  for (const HopDecision& d : trace.decisions) {
    std::string sector = d.choice.sector ? fmt::format(" s{}{}", d.choice.sector->value,
                                                       d.choice.sector->boundary ? "*" : "")
                                         : std::string();
    if (d.choice.next == kNoVertex) {
      out += fmt::format("  {} -> (stuck) [{}{}]\n", d.from, to_string(d.choice.tier), sector);
    } else {
      out += fmt::format("  {} -> {} [{}{}]\n", d.from, d.choice.next, to_string(d.choice.tier), sector);
    }
  }
  return out;
}

std::string format_delivery(const DeliveryReport& r) {
  return fmt::format(
      "{} [{}]: {}/{} delivered ({:.4f}%), max hops {}, mean hops {:.3f}, max stretch {:.3f}, "
      "non-simple {}, distance-audit failures {}\n",
      r.instance, to_string(r.strategy), r.delivered, r.pairs_tested, 100.0 * r.delivery_rate(),
      r.max_hops, r.mean_hops, r.max_stretch, r.non_simple_delivered, r.distance_audit_failures);
}

}  // namespace sgr
