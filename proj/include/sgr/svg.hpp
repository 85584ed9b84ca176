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

#include "sgr/drawing.hpp"
#include "sgr/realizer.hpp"
#include "sgr/triangulation.hpp"

namespace sgr {

struct SvgOptions {
  double scale = 600.0;
  bool tree_colors = true;
  bool labels = true;
};

/// Straight-line rendering of the drawing inside its equilateral outer
/// triangle. Edges are coloured by tree when `r` is given and tree_colors is
/// set. Coordinates are converted to decimals (6 places) only here.
std::string render_svg(const Triangulation& t, const Drawing& d, const Realizer* r,
                       const SvgOptions& options = {});

}  // namespace sgr
