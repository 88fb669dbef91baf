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

#include "speiser/split.hpp"

#include <algorithm>
#include <numeric>

#include "speiser/errors.hpp"

namespace speiser {

SpeiserGraph relabel_faces(const SpeiserGraph& graph, const BasePointSet& base,
                           const std::vector<std::string>& face_names) {
  GraphInput in = graph.ToInput();
  for (std::size_t d = 0; d < in.darts.size(); ++d) {
    in.darts[d].label =
        base.Require(face_names[graph.face_of(static_cast<int>(d))]);
  }
  for (EndDescriptor& end : in.ends) {
    end.left = kNoLabel;
    end.right = kNoLabel;
  }
  return SpeiserGraph::Build(base, std::move(in));
}

std::vector<int> side_components(const SpeiserGraph& graph,
                                 const Involution& s) {
  const LabeledMap& m = graph.map();
  const int nf = static_cast<int>(graph.faces().size());
  std::vector<int> parent(nf);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int d = 0; d < m.dart_count(); ++d) {
    if (m.is_stub(d) || s.dart_map[d] == d || s.dart_map[d] == m.twin(d)) {
      continue;
    }
    const int f = graph.face_of(d);
    const int g = graph.face_of(m.twin(d));
    if (s.fixes_face(f) || s.fixes_face(g)) continue;
    parent[find(f)] = find(g);
  }
  std::vector<int> comp(nf, -1);
  std::vector<int> id_of_root(nf, -1);
  int next = 0;
  for (int f = 0; f < nf; ++f) {
    if (s.fixes_face(f)) continue;
    const int r = find(f);
    if (id_of_root[r] == -1) id_of_root[r] = next++;
    comp[f] = id_of_root[r];
  }
  return comp;
}

SpeiserGraph split_real_label(const SpeiserGraph& graph, std::string_view name,
                              SideAssignment side) {
  auto s = find_involution(graph);
  if (!s) {
    throw Error(ErrorCode::kNoInvolution, "graph has no symmetry");
  }
  return split_real_label(graph, *s, name, side);
}

SpeiserGraph split_real_label(const SpeiserGraph& graph, const Involution& s,
                              std::string_view name, SideAssignment side) {
  const BasePointSet& base = graph.base();
  const LabelId a = base.Require(name);
  if (!base.IsRealLabel(a) || base.label(a).split != SplitSide::kNone) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(name) + " is not an unsplit real label");
  }
  if (name == "0") {
    throw Error(ErrorCode::kInvalidArgument, "the label 0 is never split");
  }
  for (const EndDescriptor& end : graph.ends()) {
    if (end.axial && (end.left == a || end.right == a)) {
      throw Error(ErrorCode::kRealSingularityOverLabel,
                  std::string(name) + " flanks an axial end");
    }
  }
  const auto comp = side_components(graph, s);
  const int nf = static_cast<int>(graph.faces().size());
  for (int f = 0; f < nf; ++f) {
    if (graph.faces()[f].label != a || !s.fixes_face(f)) continue;
    if (graph.faces()[f].kind == FaceKind::kUnbounded) {
      throw Error(ErrorCode::kRealSingularityOverLabel,
                  "unbounded face " + std::to_string(f) + " over " +
                      std::string(name) + " is bisected by the axis");
    }
    throw Error(ErrorCode::kFaceOnAxis,
                "face " + std::to_string(f) + " over " + std::string(name) +
                    " lies on the axis");
  }

  // Each pair {C, s(C)} of components: the one holding the smaller face id
  // is the "+" side unless the caller asks otherwise.
  std::vector<int> min_face(nf, nf);
  for (int f = 0; f < nf; ++f) {
    if (comp[f] >= 0) min_face[comp[f]] = std::min(min_face[comp[f]], f);
  }
  const BasePointSet split = base.Split(name);
  const std::string plus = std::string(name) + "+";
  const std::string minus = std::string(name) + "-";
  std::vector<std::string> names(nf);
  for (int f = 0; f < nf; ++f) {
    const LabelId l = graph.faces()[f].label;
    if (l != a) {
      names[f] = base.label(l).name;
      continue;
    }
    const int mine = comp[f];
    const int theirs = comp[s.face_map[f]];
    if (mine == theirs) {
      throw Error(ErrorCode::kFaceOnAxis,
                  "face " + std::to_string(f) + " is joined to its mirror image");
    }
    const bool lower = min_face[mine] < min_face[theirs];
    const bool is_plus = (side == SideAssignment::kLowestFacePlus) == lower;
    names[f] = is_plus ? plus : minus;
  }
  return relabel_faces(graph, split, names);
}

SpeiserGraph merge_split_label(const SpeiserGraph& graph,
                               std::string_view base_name) {
  const BasePointSet& base = graph.base();
  const BasePointSet merged = base.Merge(base_name);
  std::vector<std::string> names;
  for (const GraphFace& face : graph.faces()) {
    const BasePoint& p = base.label(face.label);
    names.push_back(p.split != SplitSide::kNone && p.split_base == base_name
                        ? std::string(base_name)
                        : p.name);
  }
  return relabel_faces(graph, merged, names);
}

}  // namespace speiser
