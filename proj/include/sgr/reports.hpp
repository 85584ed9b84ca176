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

#include <string>

#include "json.hpp"
#include "sgr/pipeline.hpp"
#include "sgr/report.hpp"
#include "sgr/routing.hpp"

namespace sgr {

using Json = nlohmann::json;

Json to_json(const ValidationReport& report);
Json to_json(const RouteTrace& trace);
/// Failure traces are included when `with_failures` is set.
Json to_json(const DeliveryReport& report, bool with_failures = true);
Json to_json(const ComparisonReport& report);
Json to_json(const Realizer& r);
Json to_json(const Drawing& d);
Json to_json(const SaturatedGraph& sg);

/// Self-contained replay record: rotation system, exact coordinates,
/// saturated edges and the failing trace.
Json counterexample_json(const std::string& descriptor, const Triangulation& t, const Drawing& d,
                         const SaturatedGraph* sg, Strategy strategy, const RouteTrace& trace);

/// Human-readable one-screen renderings.
std::string format_trace(const RouteTrace& trace);
std::string format_delivery(const DeliveryReport& report);

}  // namespace sgr
