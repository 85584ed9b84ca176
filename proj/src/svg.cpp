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

#include "sgr/svg.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace sgr {

namespace {

constexpr const char* kTreeColor[3] = {"#d62728", "#2ca02c", "#1f77b4"};
constexpr const char* kPlainColor = "#7f7f7f";
constexpr const char* kOuterColor = "#000000";

}  // namespace

std::string render_svg(const Triangulation& t, const Drawing& d, const Realizer* r,
                       const SvgOptions& options) {
  const CartesianPlacement p = to_cartesian(d);
  const double s = options.scale;
  const double margin = 0.05 * s;
  const double top = std::sqrt(3.0) / 2.0;
  const double width = s + 2 * margin;
  const double height = top * s + 2 * margin + (options.tree_colors && r ? 0.08 * s : 0.0);
  auto sx = [&](const Point2& q) { return margin + q.x * s; };
  auto sy = [&](const Point2& q) { return margin + (top - q.y) * s; };
  const double stroke = std::max(0.5, s / 600.0);
  const double radius = std::max(1.5, std::min(6.0, 3.0 * s / std::sqrt(static_cast<double>(t.n())) / 20.0));

  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.6f}\" height=\"{:.6f}\" "
      "viewBox=\"0 0 {:.6f} {:.6f}\">\n",
      width, height, width, height);
  out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  for (std::size_t ui = 0; ui < t.n(); ++ui) {
    const auto u = static_cast<VertexId>(ui);
    for (VertexId v : t.neighbors(u)) {
      if (v < u) continue;
      const char* color = kPlainColor;
      std::string tree = "none";
      if (t.is_outer_edge(u, v)) {
        color = kOuterColor;
        tree = "outer";
      } else if (r != nullptr && options.tree_colors) {
        std::optional<int> lab = r->label(u, v);
        if (!lab) lab = r->label(v, u);
        if (lab) {
          color = kTreeColor[*lab];
          tree = fmt::format("T{}", *lab + 1);
        }
      }
      out += fmt::format(
          "<line class=\"edge\" data-tree=\"{}\" x1=\"{:.6f}\" y1=\"{:.6f}\" x2=\"{:.6f}\" y2=\"{:.6f}\" "
          "stroke=\"{}\" stroke-width=\"{:.6f}\"/>\n",
          tree, sx(p.points[u]), sy(p.points[u]), sx(p.points[v]), sy(p.points[v]), color, stroke);
    }
  }

  for (std::size_t v = 0; v < t.n(); ++v) {
    const Triple& c = d.coords[v];
    out += fmt::format(
        "<circle class=\"vertex\" id=\"v{}\" cx=\"{:.6f}\" cy=\"{:.6f}\" r=\"{:.6f}\" fill=\"#222222\">"
        "<title>{} ({},{},{})/{}</title></circle>\n",
        v, sx(p.points[v]), sy(p.points[v]), radius, v, c[0], c[1], c[2], d.denom);
    if (options.labels) {
      const std::string name = v < 3 ? fmt::format("A{}", v + 1) : fmt::format("{}", v);
      out += fmt::format(
          "<text x=\"{:.6f}\" y=\"{:.6f}\" font-size=\"{:.6f}\" font-family=\"sans-serif\">{}</text>\n",
          sx(p.points[v]) + radius, sy(p.points[v]) - radius, std::max(6.0, s / 60.0), name);
    }
  }

  if (r != nullptr && options.tree_colors) {
    const double ly = top * s + 2 * margin + 0.03 * s;
    for (int i = 0; i < 3; ++i) {
      const double lx = margin + i * 0.2 * s;
      out += fmt::format(
          "<line class=\"legend\" x1=\"{:.6f}\" y1=\"{:.6f}\" x2=\"{:.6f}\" y2=\"{:.6f}\" stroke=\"{}\" "
          "stroke-width=\"{:.6f}\"/>\n<text x=\"{:.6f}\" y=\"{:.6f}\" font-size=\"{:.6f}\" "
          "font-family=\"sans-serif\">T{}</text>\n",
          lx, ly, lx + 0.05 * s, ly, kTreeColor[i], 2 * stroke, lx + 0.06 * s, ly + 0.01 * s,
          std::max(6.0, s / 40.0), i + 1);
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace sgr
