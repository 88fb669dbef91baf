// Copyright 2026 The Speiser Authors
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

#include "speiser/labeled_map.hpp"

#include <deque>
#include <string>
#include <utility>

#include "speiser/errors.hpp"

namespace speiser {

LabeledMap::LabeledMap(std::vector<MapVertex> vertices, std::vector<Dart> darts,
                       std::vector<std::vector<int>> rotation)
    : vertices_(std::move(vertices)),
      darts_(std::move(darts)),
      rotation_(std::move(rotation)) {
  if (rotation_.size() != vertices_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "one rotation per vertex is required");
  }
  const int n = dart_count();
  slot_.assign(n, -1);
  for (int v = 0; v < vertex_count(); ++v) {
    for (int i = 0; i < degree(v); ++i) {
      const int d = rotation_[v][i];
      if (d < 0 || d >= n) {
        throw Error(ErrorCode::kInvalidArgument,
                    "rotation of vertex " + std::to_string(v) +
                        " references unknown half-edge " + std::to_string(d));
      }
      if (darts_[d].vertex != v || slot_[d] != -1) {
        throw Error(ErrorCode::kInvalidArgument,
                    "half-edge " + std::to_string(d) +
                        " misplaced in rotation of vertex " +
                        std::to_string(v));
      }
      slot_[d] = i;
    }
  }
  for (int d = 0; d < n; ++d) {
    if (slot_[d] == -1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "half-edge " + std::to_string(d) + " missing from rotation");
    }
    const Dart& dart = darts_[d];
    if (dart.twin == kStub) {
      if (dart.end < 0) {
        throw Error(ErrorCode::kDanglingHalfEdge,
                    "half-edge " + std::to_string(d) + " at vertex " +
                        std::to_string(dart.vertex) + " has no pair");
      }
      continue;
    }
    if (dart.twin < 0 || dart.twin >= n || dart.twin == d ||
        darts_[dart.twin].twin != d) {
      throw Error(ErrorCode::kDanglingHalfEdge,
                  "half-edge " + std::to_string(d) + " at vertex " +
                      std::to_string(dart.vertex) +
                      " is not paired consistently");
    }
  }
}

int LabeledMap::succ(int d) const {
  const auto& rot = rotation_[darts_[d].vertex];
  const int i = slot_[d] + 1;
  return rot[i == static_cast<int>(rot.size()) ? 0 : i];
}

int LabeledMap::pred(int d) const {
  const auto& rot = rotation_[darts_[d].vertex];
  const int i = slot_[d];
  return rot[i == 0 ? rot.size() - 1 : i - 1];
}

std::vector<FaceWalk> LabeledMap::TraceFaces(std::vector<int>* face_of) const {
  std::vector<FaceWalk> faces;
  std::vector<int> owner(darts_.size(), -1);
  for (int s = 0; s < dart_count(); ++s) {
    if (!is_stub(s)) continue;
    FaceWalk walk;
    walk.closed = false;
    int d = succ(s);
    const int id = static_cast<int>(faces.size());
    while (true) {
      owner[d] = id;
      walk.darts.push_back(d);
      if (is_stub(d)) break;
      d = succ(twin(d));
    }
    faces.push_back(std::move(walk));
  }
  for (int start = 0; start < dart_count(); ++start) {
    if (owner[start] != -1) continue;
    FaceWalk walk;
    const int id = static_cast<int>(faces.size());
    int d = start;
    do {
      owner[d] = id;
      walk.darts.push_back(d);
      d = succ(twin(d));
    } while (d != start);
    faces.push_back(std::move(walk));
  }
  if (face_of != nullptr) *face_of = std::move(owner);
  return faces;
}

bool LabeledMap::IsConnected() const {
  if (vertices_.empty()) return true;
  std::vector<bool> seen(vertices_.size(), false);
  std::deque<int> queue{0};
  seen[0] = true;
  int count = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int d : rotation_[v]) {
      if (is_stub(d)) continue;
      const int u = darts_[twin(d)].vertex;
      if (!seen[u]) {
        seen[u] = true;
        ++count;
        queue.push_back(u);
      }
    }
  }
  return count == vertex_count();
}

std::vector<std::int64_t> CanonicalCode(
    const LabeledMap& map, int root, bool mirror,
    std::span<const std::int64_t> label_key) {
  const int nv = map.vertex_count();
  std::vector<int> order(nv, -1);
  std::vector<int> entry(nv, -1);
  std::vector<int> queue;
  queue.reserve(nv);

  auto step = [&](int d) { return mirror ? map.pred(d) : map.succ(d); };
  auto offset = [&](int from, int to) {
    int k = 0;
    for (int d = from; d != to; d = step(d)) ++k;
    return k;
  };
  auto corner = [&](int d) {
    // Label of the corner that precedes d in the walking direction.
    const LabelId id = mirror ? map.label(map.succ(d)) : map.label(d);
    return id == kNoLabel ? std::int64_t{-1} : label_key[id];
  };

  std::vector<std::int64_t> code;
  code.reserve(static_cast<std::size_t>(map.dart_count()) * 3 + nv * 3);
  const int v0 = map.dart(root).vertex;
  order[v0] = 0;
  entry[v0] = root;
  queue.push_back(v0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    const MapVertex& mv = map.vertex(v);
    code.push_back(mv.parity == Parity::kCross ? 1 : 2);
    code.push_back(mv.on_axis ? 1 : 0);
    code.push_back(map.degree(v));
    int d = entry[v];
    for (int i = 0; i < map.degree(v); ++i, d = step(d)) {
      code.push_back(corner(d));
      if (map.is_stub(d)) {
        code.push_back(-1);
        code.push_back(-1);
        continue;
      }
      const int t = map.twin(d);
      const int u = map.dart(t).vertex;
      if (order[u] == -1) {
        order[u] = static_cast<int>(queue.size());
        entry[u] = t;
        queue.push_back(u);
      }
      code.push_back(order[u]);
      code.push_back(offset(entry[u], t));
    }
  }
  code.push_back(static_cast<std::int64_t>(queue.size()));
  return code;
}

}  // namespace speiser
