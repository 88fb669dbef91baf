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

#include "speiser/almost_symmetric.hpp"

#include <set>
#include <string>
#include <utility>

#include "speiser/errors.hpp"

namespace speiser {
namespace {

[[noreturn]] void Reject(const std::string& why) {
  throw Error(ErrorCode::kNotAlmostSymmetric, why);
}

}  // namespace

AlmostSymmetricReport almost_symmetric_audit(const SpeiserTree& tree) {
  if (!tree.involution()) Reject("tree carries no involution");
  const TreeInvolution& s = *tree.involution();
  for (const BasePoint& p : tree.base().labels()) {
    if (!p.value.IsReal()) Reject("base point " + p.name + " is not real");
  }
  for (int v = 0; v < tree.vertex_count(); ++v) {
    if (tree.vertices()[v].on_axis || s.vertex_map[v] == v) {
      Reject("v" + std::to_string(v) + " lies on the axis");
    }
  }
  AlmostSymmetricReport report;
  int crossings = 0;
  std::set<std::pair<int, int>> edges;
  for (int e = 0; e < static_cast<int>(tree.edges().size()); ++e) {
    const TreeEdge& edge = tree.edges()[e];
    edges.insert(std::minmax(edge.u, edge.v));
    if (s.vertex_map[edge.u] == edge.v) {
      ++crossings;
      report.crossing_edge = e;
    }
  }
  if (crossings != 1) {
    Reject(std::to_string(crossings) + " edges cross the axis, expected 1");
  }
  for (int v = 0; v < tree.vertex_count(); ++v) {
    if (tree.vertices()[v].parity == tree.vertices()[s.vertex_map[v]].parity) {
      Reject("involution keeps the parity of v" + std::to_string(v));
    }
  }
  for (const TreeEdge& edge : tree.edges()) {
    if (!edges.count(std::minmax(s.vertex_map[edge.u], s.vertex_map[edge.v]))) {
      Reject("involution does not map edges to edges");
    }
  }
  return report;
}

}  // namespace speiser
