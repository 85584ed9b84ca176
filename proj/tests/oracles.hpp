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

// Brute-force references shared by the unit and acceptance tests.

#include <algorithm>
#include <regex>
#include <string>
#include <tuple>
#include <vector>

#include "sgr/realizer.hpp"
#include "sgr/triangulation.hpp"

namespace sgr::testing {

struct DirectedLabel {
  VertexId from;
  VertexId to;
  int tree;
};

// Schnyder conditions checked from scratch on an explicit list of labelled
// directed edges. Incidence around v is encoded as a string ('A'..'C' for
// leaving T1..T3, 'a'..'c' for entering) and matched against the pattern.
inline bool satisfies_schnyder(const Triangulation& t, const std::vector<DirectedLabel>& labels) {
  for (const auto& l : labels) {
    if (is_corner(l.from)) return false;
    if (is_corner(l.to) && l.to != l.tree) return false;
  }
  static const std::regex pattern("Ac*Ba*Cb*");
  for (VertexId v = 3; v < static_cast<VertexId>(t.n()); ++v) {
    std::string s;
    for (VertexId w : t.neighbors(v)) {
      for (const auto& l : labels) {
        if (l.from == v && l.to == w) s += static_cast<char>('A' + l.tree);
        if (l.from == w && l.to == v) s += static_cast<char>('a' + l.tree);
      }
    }
    if (s.size() != t.degree(v)) return false;
    const auto start = s.find('A');
    if (start == std::string::npos) return false;
    std::rotate(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(start), s.end());
    if (!std::regex_match(s, pattern)) return false;
  }
  return true;
}

// Every assignment of (direction, tree) to the internal edges of t.
inline std::vector<std::vector<DirectedLabel>> enumerate_realizers(const Triangulation& t) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < static_cast<VertexId>(t.n()); ++u)
    for (VertexId v : t.neighbors(u))
      if (u < v && !t.is_outer_edge(u, v)) edges.emplace_back(u, v);
  std::vector<std::vector<DirectedLabel>> found;
  std::size_t total = 1;
  for (std::size_t k = 0; k < edges.size(); ++k) total *= 6;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<DirectedLabel> labels;
    std::size_t c = code;
    for (const auto& [u, v] : edges) {
      const int choice = static_cast<int>(c % 6);
      c /= 6;
      if (choice < 3) labels.push_back({u, v, choice});
      else labels.push_back({v, u, choice - 3});
    }
    if (satisfies_schnyder(t, labels)) found.push_back(std::move(labels));
  }
  return found;
}

inline std::vector<DirectedLabel> as_labels(const Realizer& r) {
  std::vector<DirectedLabel> out;
  for (VertexId v = 3; v < static_cast<VertexId>(r.parent.size()); ++v)
    for (int i = 0; i < 3; ++i) out.push_back({v, r.parent[v][i], i});
  return out;
}

inline bool same_labels(std::vector<DirectedLabel> a, std::vector<DirectedLabel> b) {
  auto key = [](const DirectedLabel& l) { return std::tuple(l.from, l.to, l.tree); };
  auto less = [&](const DirectedLabel& x, const DirectedLabel& y) { return key(x) < key(y); };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [&](const DirectedLabel& x, const DirectedLabel& y) { return key(x) == key(y); });
}

}  // namespace sgr::testing
