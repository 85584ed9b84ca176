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

#include "sgr/triangulation.hpp"

#include <algorithm>
#include <queue>

#include <fmt/format.h>

namespace sgr {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Check names double as the error classification used by build_triangulation.
constexpr const char* kSizeCheck = "size";
constexpr const char* kRotationCheck = "rotation";
constexpr const char* kFaceCheck = "faces";
constexpr const char* kEdgeCountCheck = "edge_count";
constexpr const char* kOuterFaceCheck = "outer_face";
constexpr const char* kConnectedCheck = "connected";

struct Scan {
  ValidationReport report;
  bool consistent = false;
  std::vector<std::size_t> offset;
  std::vector<std::size_t> twin;
  std::vector<std::size_t> next;
  std::vector<std::size_t> face;
  std::vector<std::vector<VertexId>> face_vertices;
};

// Per vertex: (neighbour, position in rotation) sorted by neighbour.
using SortedIndex = std::vector<std::vector<std::pair<VertexId, std::size_t>>>;

std::size_t lookup(const SortedIndex& index, VertexId u, VertexId v) {
  const auto& row = index[u];
  auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(v, std::size_t{0}));
  if (it == row.end() || it->first != v) return kNone;
  return it->second;
}

Scan scan_rotation(const Rotation& rotation) {
  Scan s;
  auto& r = s.report;
  const std::size_t n = rotation.size();
  if (n < 3) {
    r.fail(kSizeCheck, fmt::format("need at least 3 vertices, got {}", n));
    return s;
  }

  SortedIndex index(n);
  bool consistent = true;
  for (std::size_t u = 0; u < n; ++u) {
    const auto& row = rotation[u];
    for (std::size_t k = 0; k < row.size(); ++k) {
      VertexId v = row[k];
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        r.fail(kRotationCheck, fmt::format("vertex {} lists out-of-range neighbour {}", u, v),
               {static_cast<int>(u)});
        consistent = false;
        continue;
      }
      if (static_cast<std::size_t>(v) == u) {
        r.fail(kRotationCheck, fmt::format("loop at vertex {}", u), {static_cast<int>(u)});
        consistent = false;
        continue;
      }
      index[u].emplace_back(v, k);
    }
    std::sort(index[u].begin(), index[u].end());
    for (std::size_t k = 1; k < index[u].size(); ++k) {
      if (index[u][k].first == index[u][k - 1].first) {
        r.fail(kRotationCheck,
               fmt::format("parallel edge {}-{}", u, index[u][k].first),
               {static_cast<int>(u), index[u][k].first});
        consistent = false;
      }
    }
  }
  if (!consistent) return s;

  for (std::size_t u = 0; u < n; ++u) {
    for (VertexId v : rotation[u]) {
      if (lookup(index, v, static_cast<VertexId>(u)) == kNone) {
        r.fail(kRotationCheck,
               fmt::format("{} lists {} but {} does not list {}", u, v, v, u),
               {static_cast<int>(u), v});
        consistent = false;
      }
    }
  }
  if (!consistent) return s;
  s.consistent = true;

  s.offset.assign(n + 1, 0);
  for (std::size_t u = 0; u < n; ++u) s.offset[u + 1] = s.offset[u] + rotation[u].size();
  const std::size_t halves = s.offset[n];
  s.twin.assign(halves, kNone);
  s.next.assign(halves, kNone);
  for (std::size_t u = 0; u < n; ++u) {
    const auto& row = rotation[u];
    for (std::size_t k = 0; k < row.size(); ++k) {
      const VertexId v = row[k];
      const std::size_t back = lookup(index, v, static_cast<VertexId>(u));
      s.twin[s.offset[u] + k] = s.offset[v] + back;
      const std::size_t deg_v = rotation[v].size();
      const std::size_t prev = (back + deg_v - 1) % deg_v;
      s.next[s.offset[u] + k] = s.offset[v] + prev;
    }
  }

  std::vector<VertexId> origin(halves);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t k = 0; k < rotation[u].size(); ++k)
      origin[s.offset[u] + k] = static_cast<VertexId>(u);

  s.face.assign(halves, kNone);
  for (std::size_t h = 0; h < halves; ++h) {
    if (s.face[h] != kNone) continue;
    const std::size_t id = s.face_vertices.size();
    std::vector<VertexId> verts;
    std::size_t g = h;
    while (s.face[g] == kNone) {
      s.face[g] = id;
      verts.push_back(origin[g]);
      g = s.next[g];
    }
    s.face_vertices.push_back(std::move(verts));
  }

  bool triangulated = true;
  for (std::size_t f = 0; f < s.face_vertices.size(); ++f) {
    const auto& fv = s.face_vertices[f];
    if (fv.size() != 3) {
      std::string listing;
      for (VertexId v : fv) listing += fmt::format("{}{}", listing.empty() ? "" : " ", v);
      r.fail(kFaceCheck, fmt::format("face {} has size {}: ({})", f, fv.size(), listing),
             std::vector<int>(fv.begin(), fv.end()));
      triangulated = false;
    }
  }
  const std::size_t want_faces = 2 * n - 4;
  if (triangulated && s.face_vertices.size() != want_faces) {
    r.fail(kFaceCheck,
           fmt::format("{} faces, expected {}", s.face_vertices.size(), want_faces));
  }

  const std::size_t edges = halves / 2;
  if (edges != 3 * n - 6) {
    r.fail(kEdgeCountCheck, fmt::format("{} edges, expected {}", edges, 3 * n - 6));
  }

  // Outer face traversed with the face on the left: A1 -> A3 -> A2.
  const std::size_t h02 = lookup(index, kA1, kA3);
  bool outer_ok = false;
  if (h02 != kNone) {
    const auto& fv = s.face_vertices[s.face[s.offset[kA1] + h02]];
    outer_ok = fv.size() == 3 && fv[0] == kA1 && fv[1] == kA3 && fv[2] == kA2;
  }
  if (!outer_ok) {
    r.fail(kOuterFaceCheck, "(A1, A3, A2) is not a face of the rotation system",
           {kA1, kA2, kA3});
  }

  std::vector<char> seen(n, 0);
  std::queue<VertexId> q;
  q.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop();
    for (VertexId v : rotation[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        q.push(v);
      }
    }
  }
  if (reached != n) {
    r.fail(kConnectedCheck, fmt::format("only {} of {} vertices reachable from A1", reached, n));
  }
  return s;
}

TriangulationError::Kind classify(const std::string& check) {
  using K = TriangulationError::Kind;
  if (check == kSizeCheck) return K::kTooSmall;
  if (check == kRotationCheck) return K::kInconsistentRotation;
  if (check == kEdgeCountCheck) return K::kWrongEdgeCount;
  if (check == kOuterFaceCheck) return K::kMissingOuterFace;
  return K::kNotTriangulated;
}

}  // namespace

bool Triangulation::adjacent(VertexId u, VertexId v) const {
  const auto& row = sorted_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

int Triangulation::position(VertexId u, VertexId v) const {
  const auto& row = rotation_[u];
  auto it = std::find(row.begin(), row.end(), v);
  return it == row.end() ? -1 : static_cast<int>(it - row.begin());
}

std::size_t Triangulation::half_edge(VertexId u, VertexId v) const {
  const int k = position(u, v);
  if (k < 0) throw std::out_of_range(fmt::format("{}-{} is not an edge", u, v));
  return offset_[u] + static_cast<std::size_t>(k);
}

ValidationReport validate_triangulation(const Rotation& rotation) {
  return scan_rotation(rotation).report;
}

ValidationReport validate_triangulation(const Triangulation& t) {
  return validate_triangulation(t.rotation());
}

Triangulation build_triangulation(Rotation rotation) {
  Scan s = scan_rotation(rotation);
  if (!s.report.ok()) {
    // Precedence: structural problems first, then face shape, then counts.
    static const char* const order[] = {kSizeCheck, kRotationCheck, kFaceCheck,
                                        kEdgeCountCheck, kOuterFaceCheck, kConnectedCheck};
    for (const char* check : order) {
      for (const Issue& issue : s.report.issues) {
        if (issue.check == check) throw TriangulationError(classify(check), issue.message);
      }
    }
  }

  Triangulation t;
  const std::size_t n = rotation.size();
  t.offset_ = std::move(s.offset);
  t.half_twin_ = std::move(s.twin);
  t.half_next_ = std::move(s.next);
  t.half_face_ = std::move(s.face);
  t.half_origin_.resize(t.half_twin_.size());
  t.half_target_.resize(t.half_twin_.size());
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t k = 0; k < rotation[u].size(); ++k) {
      t.half_origin_[t.offset_[u] + k] = static_cast<VertexId>(u);
      t.half_target_[t.offset_[u] + k] = rotation[u][k];
    }
  }
  t.faces_.reserve(s.face_vertices.size());
  for (const auto& fv : s.face_vertices) t.faces_.push_back({fv[0], fv[1], fv[2]});
  t.outer_face_ = t.half_face_[t.offset_[kA1] + static_cast<std::size_t>(
                                                     std::find(rotation[kA1].begin(),
                                                               rotation[kA1].end(), kA3) -
                                                     rotation[kA1].begin())];
  t.sorted_.resize(n);
  for (std::size_t u = 0; u < n; ++u) {
    t.sorted_[u] = rotation[u];
    std::sort(t.sorted_[u].begin(), t.sorted_[u].end());
  }
  t.rotation_ = std::move(rotation);
  return t;
}

}  // namespace sgr
