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

#include "speiser/speiser_tree.hpp"

#include <string>

#include "speiser/errors.hpp"

namespace speiser {
namespace {

[[noreturn]] void Violation(const std::string& what) {
  throw Error(ErrorCode::kInvariantViolation, what);
}

std::string V(int v) { return "v" + std::to_string(v); }

}  // namespace

SpeiserTree SpeiserTree::Create(Parts parts) {
  SpeiserTree tree(std::move(parts));
  const Parts& p = tree.parts_;
  const int nv = static_cast<int>(p.vertices.size());
  const int ne = static_cast<int>(p.edges.size());
  const int nends = static_cast<int>(p.ends.size());
  const int q = p.base.q();

  if (nv == 0) Violation("tree has no vertices");
  if (static_cast<int>(p.rotation.size()) != nv) {
    Violation("rotation count differs from vertex count");
  }
  for (int e = 0; e < ne; ++e) {
    const TreeEdge& edge = p.edges[e];
    if (edge.u < 0 || edge.u >= nv || edge.v < 0 || edge.v >= nv) {
      Violation("edge e" + std::to_string(e) + " references unknown vertex");
    }
    if (edge.u == edge.v) Violation("edge e" + std::to_string(e) + " is a loop");
    if (p.vertices[edge.u].parity == p.vertices[edge.v].parity) {
      Violation("edge e" + std::to_string(e) +
                " joins two vertices of the same parity");
    }
  }
  for (int k = 0; k < nends; ++k) {
    const TreeEnd& end = p.ends[k];
    if (end.vertex < 0 || end.vertex >= nv) {
      Violation("end" + std::to_string(k) + " attached to unknown vertex");
    }
    if (end.left < 0 || end.left >= p.base.size() || end.right < 0 ||
        end.right >= p.base.size()) {
      Violation("end" + std::to_string(k) + " has an unknown flank label");
    }
  }

  std::vector<int> edge_uses(ne, 0);
  std::vector<int> end_uses(nends, 0);
  std::vector<std::vector<int>> rotation(nv);
  std::vector<Dart> darts(2 * ne + nends);
  for (int e = 0; e < ne; ++e) {
    darts[2 * e] = Dart{p.edges[e].u, 2 * e + 1, -1, kNoLabel};
    darts[2 * e + 1] = Dart{p.edges[e].v, 2 * e, -1, kNoLabel};
  }
  for (int k = 0; k < nends; ++k) {
    darts[2 * ne + k] = Dart{p.ends[k].vertex, kStub, k, kNoLabel};
  }
  for (int v = 0; v < nv; ++v) {
    for (const RotationItem& item : p.rotation[v]) {
      if (item.kind == RotationItem::Kind::kEdge) {
        if (item.id < 0 || item.id >= ne) {
          Violation("rotation of " + V(v) + " references unknown edge e" +
                    std::to_string(item.id));
        }
        const TreeEdge& edge = p.edges[item.id];
        if (edge.u != v && edge.v != v) {
          Violation("rotation of " + V(v) + " lists non-incident edge e" +
                    std::to_string(item.id));
        }
        ++edge_uses[item.id];
        rotation[v].push_back(edge.u == v ? 2 * item.id : 2 * item.id + 1);
      } else {
        if (item.id < 0 || item.id >= nends) {
          Violation("rotation of " + V(v) + " references unknown end" +
                    std::to_string(item.id));
        }
        if (p.ends[item.id].vertex != v) {
          Violation("rotation of " + V(v) + " lists end" +
                    std::to_string(item.id) + " attached elsewhere");
        }
        ++end_uses[item.id];
        rotation[v].push_back(2 * ne + item.id);
      }
    }
  }
  for (int e = 0; e < ne; ++e) {
    if (edge_uses[e] != 2) {
      Violation("edge e" + std::to_string(e) +
                " must appear once in each endpoint rotation");
    }
  }
  for (int k = 0; k < nends; ++k) {
    if (end_uses[k] != 1) {
      Violation("end" + std::to_string(k) + " must appear once in a rotation");
    }
  }
  if (ne != nv - 1) Violation("tree must have |V| - 1 edges");

  std::vector<MapVertex> mv(nv);
  for (int v = 0; v < nv; ++v) {
    mv[v] = MapVertex{p.vertices[v].parity, p.vertices[v].on_axis};
  }
  tree.map_ = LabeledMap(std::move(mv), std::move(darts), std::move(rotation));
  if (!tree.map_.IsConnected()) Violation("tree is not connected");

  if (nends < 2) Violation("a Speiser tree needs at least two ends");
  if (tree.axial_end_count() > 2) Violation("more than two axial ends");
  for (int v = 0; v < nv; ++v) {
    const int deg = tree.degree(v);
    if (deg < 2 || deg > q) {
      Violation(V(v) + " has degree " + std::to_string(deg) +
                ", expected between 2 and " + std::to_string(q));
    }
  }

  // Face labels come from the end flanks; walking from the left side of one
  // end must arrive at an end whose right flank carries the same label.
  std::vector<int> face_of;
  const auto walks = tree.map_.TraceFaces(&face_of);
  auto& md = tree.map_.mutable_darts();
  for (const FaceWalk& walk : walks) {
    if (walk.closed) Violation("tree contains a cycle");
    const int last = walk.darts.back();
    const int from_end = md[tree.map_.pred(walk.darts.front())].end;
    const int to_end = md[last].end;
    const LabelId label = p.ends[from_end].left;
    if (p.ends[to_end].right != label) {
      Violation("circular consistency broken between end" +
                std::to_string(from_end) + " and end" + std::to_string(to_end));
    }
    for (int d : walk.darts) md[d].label = label;
    tree.faces_.push_back(TreeFace{label, from_end, to_end});
  }
  if (static_cast<int>(tree.faces_.size()) != nends) {
    Violation("number of tree faces differs from number of ends");
  }

  if (p.axis_orientation) {
    const AxisOrientation& o = *p.axis_orientation;
    if (o.from < 0 || o.from >= nv || o.to < 0 || o.to >= nv ||
        o.from == o.to) {
      Violation("axis orientation must name two distinct vertices");
    }
    if (!p.vertices[o.from].on_axis || !p.vertices[o.to].on_axis) {
      Violation("axis orientation must use on-axis vertices");
    }
  }
  if (p.involution) {
    const TreeInvolution& s = *p.involution;
    if (static_cast<int>(s.vertex_map.size()) != nv ||
        static_cast<int>(s.end_map.size()) != nends) {
      Violation("involution must map every vertex and every end");
    }
    for (int v = 0; v < nv; ++v) {
      const int w = s.vertex_map[v];
      if (w < 0 || w >= nv || s.vertex_map[w] != v) {
        Violation("involution is not an involution at " + V(v));
      }
    }
    for (int k = 0; k < nends; ++k) {
      const int j = s.end_map[k];
      if (j < 0 || j >= nends || s.end_map[j] != k) {
        Violation("involution is not an involution at end" +
                  std::to_string(k));
      }
    }
  }
  return tree;
}

int SpeiserTree::axial_end_count() const {
  int n = 0;
  for (const TreeEnd& end : parts_.ends) n += end.axial ? 1 : 0;
  return n;
}

int SpeiserTree::EdgeDart(int edge, int at_vertex) const {
  return parts_.edges[edge].u == at_vertex ? 2 * edge : 2 * edge + 1;
}

LogarithmicEnds logarithmic_ends(const SpeiserTree& tree) {
  return LogarithmicEnds{tree.end_count(), tree.ends()};
}

int infer_degree(int end_count) {
  if (end_count < 2) {
    throw Error(ErrorCode::kTooFewEnds,
                "degree needs at least two logarithmic ends, got " +
                    std::to_string(end_count));
  }
  return end_count - 2;
}

int infer_degree(const SpeiserTree& tree) {
  return infer_degree(tree.end_count());
}

SpeiserTree expand_ends(const SpeiserTree& tree, int periods,
                        std::vector<std::vector<int>>* path_vertices) {
  if (periods < 0) {
    throw Error(ErrorCode::kInvalidArgument, "depth must be non-negative");
  }
  SpeiserTree::Parts parts = tree.parts();
  std::vector<std::vector<int>> paths(parts.ends.size());
  for (std::size_t k = 0; k < parts.ends.size(); ++k) {
    TreeEnd& end = parts.ends[k];
    int prev = end.vertex;
    for (int step = 0; step < 2 * periods; ++step) {
      const int v = static_cast<int>(parts.vertices.size());
      parts.vertices.push_back(
          TreeVertex{Opposite(parts.vertices[prev].parity), end.axial});
      const int e = static_cast<int>(parts.edges.size());
      parts.edges.push_back(TreeEdge{prev, v});
      for (RotationItem& item : parts.rotation[prev]) {
        if (item == RotationItem::End(static_cast<int>(k))) {
          item = RotationItem::Edge(e);
        }
      }
      parts.rotation.push_back(
          {RotationItem::Edge(e), RotationItem::End(static_cast<int>(k))});
      paths[k].push_back(v);
      prev = v;
    }
    end.vertex = prev;
  }
  if (parts.involution) {
    TreeInvolution& s = *parts.involution;
    s.vertex_map.resize(parts.vertices.size());
    for (std::size_t k = 0; k < paths.size(); ++k) {
      const auto& mine = paths[k];
      const auto& theirs = paths[s.end_map[k]];
      for (std::size_t i = 0; i < mine.size(); ++i) {
        s.vertex_map[mine[i]] = theirs[i];
      }
    }
  }
  if (path_vertices != nullptr) *path_vertices = paths;
  return SpeiserTree::Create(std::move(parts));
}

}  // namespace speiser
