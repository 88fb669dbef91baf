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

#include "speiser/skeleton.hpp"

#include <map>
#include <string>
#include <utility>

#include "speiser/errors.hpp"

namespace speiser {

SpeiserTree skeleton_tree(const SpeiserGraph& graph) {
  const LabeledMap& m = graph.map();
  SpeiserTree::Parts parts;
  parts.base = graph.base();
  parts.axis_orientation = graph.axis_orientation();
  for (int v = 0; v < m.vertex_count(); ++v) {
    parts.vertices.push_back(TreeVertex{m.vertex(v).parity, m.vertex(v).on_axis});
  }

  std::map<std::pair<int, int>, int> edge_id;
  auto neighbor = [&](int d) { return m.is_stub(d) ? -1 : m.dart(m.twin(d)).vertex; };
  parts.rotation.resize(m.vertex_count());
  for (int v = 0; v < m.vertex_count(); ++v) {
    const auto rot = m.rotation(v);
    const int n = static_cast<int>(rot.size());
    // Start after a change of neighbor so that no bundle wraps around.
    int start = 0;
    for (int i = 0; i < n; ++i) {
      const int prev = rot[(i + n - 1) % n];
      if (m.is_stub(rot[i]) || m.is_stub(prev) ||
          neighbor(rot[i]) != neighbor(prev)) {
        start = i;
        break;
      }
    }
    int last_neighbor = -2;
    for (int i = 0; i < n; ++i) {
      const int d = rot[(start + i) % n];
      if (m.is_stub(d)) {
        parts.rotation[v].push_back(RotationItem::End(m.dart(d).end));
        last_neighbor = -2;
        continue;
      }
      const int u = neighbor(d);
      if (u == last_neighbor) continue;
      last_neighbor = u;
      const auto key = std::minmax(u, v);
      auto it = edge_id.find(key);
      int e;
      if (it == edge_id.end()) {
        e = static_cast<int>(parts.edges.size());
        edge_id.emplace(key, e);
        parts.edges.push_back(TreeEdge{v, u});
      } else {
        e = it->second;
      }
      parts.rotation[v].push_back(RotationItem::Edge(e));
    }
  }
  std::vector<int> seen(parts.edges.size(), 0);
  for (const auto& rot : parts.rotation) {
    for (const RotationItem& item : rot) {
      if (item.kind == RotationItem::Kind::kEdge && ++seen[item.id] > 2) {
        throw Error(ErrorCode::kNotATree,
                    "edge bundle e" + std::to_string(item.id) +
                        " is interrupted by another edge");
      }
    }
  }
  if (parts.edges.size() + 1 != parts.vertices.size() || !m.IsConnected()) {
    throw Error(ErrorCode::kNotATree,
                "collapsing bundles leaves " +
                    std::to_string(parts.edges.size()) + " edges on " +
                    std::to_string(parts.vertices.size()) + " vertices");
  }

  for (const EndDescriptor& end : graph.ends()) {
    parts.ends.push_back(TreeEnd{m.dart(end.stub).vertex, end.left, end.right,
                                 end.axial});
  }
  return SpeiserTree::Create(std::move(parts));
}

}  // namespace speiser
