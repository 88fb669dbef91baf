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

#include "speiser/speiser_graph.hpp"

#include <string>
#include <utility>

#include "speiser/errors.hpp"

namespace speiser {

SpeiserGraph SpeiserGraph::Build(BasePointSet base, GraphInput input) {
  SpeiserGraph g;
  g.base_ = std::move(base);
  g.depth_ = input.depth;
  g.axis_orientation_ = input.axis_orientation;
  g.map_ = LabeledMap(std::move(input.vertices), std::move(input.darts),
                      std::move(input.rotation));
  g.ends_ = std::move(input.ends);

  const LabeledMap& m = g.map_;
  for (int d = 0; d < m.dart_count(); ++d) {
    const LabelId l = m.label(d);
    if (l != kNoLabel && (l < 0 || l >= g.base_.size())) {
      throw Error(ErrorCode::kUnlabelableFace,
                  "half-edge " + std::to_string(d) + " carries unknown label");
    }
    if (!m.is_stub(d)) continue;
    const int k = m.dart(d).end;
    if (k >= static_cast<int>(g.ends_.size())) g.ends_.resize(k + 1);
    EndDescriptor& end = g.ends_[k];
    if (end.path.empty()) end.attach_vertex = m.dart(d).vertex;
    end.stub = d;
  }

  std::vector<LabelId> seed(m.dart_count());
  for (int d = 0; d < m.dart_count(); ++d) seed[d] = m.label(d);
  auto add_seed = [&](int d, LabelId l) {
    if (l == kNoLabel) return;
    if (seed[d] != kNoLabel && seed[d] != l) {
      throw Error(ErrorCode::kUnlabelableFace,
                  "end flank conflicts with the label at half-edge " +
                      std::to_string(d));
    }
    seed[d] = l;
  };
  for (const EndDescriptor& end : g.ends_) {
    add_seed(end.stub, end.right);
    add_seed(m.succ(end.stub), end.left);
  }

  const auto walks = m.TraceFaces(&g.face_of_);
  auto& darts = g.map_.mutable_darts();
  for (std::size_t f = 0; f < walks.size(); ++f) {
    GraphFace face;
    face.darts = walks[f].darts;
    face.kind = !walks[f].closed         ? FaceKind::kUnbounded
                : face.darts.size() == 2 ? FaceKind::kTwoGon
                                         : FaceKind::kBounded;
    for (int d : face.darts) {
      if (seed[d] == kNoLabel) continue;
      if (face.label != kNoLabel && face.label != seed[d]) {
        throw Error(ErrorCode::kUnlabelableFace,
                    "face " + std::to_string(f) + " has conflicting labels " +
                        g.base_.label(face.label).name + " and " +
                        g.base_.label(seed[d]).name);
      }
      face.label = seed[d];
    }
    if (face.label == kNoLabel) {
      throw Error(ErrorCode::kUnlabelableFace,
                  "face " + std::to_string(f) + " has no label");
    }
    for (int d : face.darts) darts[d].label = face.label;
    g.faces_.push_back(std::move(face));
  }
  for (EndDescriptor& end : g.ends_) {
    end.right = m.label(end.stub);
    end.left = m.left_label(end.stub);
  }

  g.edge_of_.assign(m.dart_count(), -1);
  for (int d = 0; d < m.dart_count(); ++d) {
    if (m.is_stub(d) || m.twin(d) < d) continue;
    g.edge_of_[d] = g.edge_of_[m.twin(d)] = static_cast<int>(g.edges_.size());
    g.edges_.push_back(GraphEdge{d, m.twin(d)});
  }
  g.interior_.assign(m.vertex_count(), true);
  for (int d = 0; d < m.dart_count(); ++d) {
    if (m.is_stub(d)) g.interior_[m.dart(d).vertex] = false;
  }
  return g;
}

int SpeiserGraph::unbounded_face_count() const {
  int n = 0;
  for (const GraphFace& f : faces_) n += f.kind == FaceKind::kUnbounded;
  return n;
}

GraphInput SpeiserGraph::ToInput() const {
  GraphInput in;
  in.vertices = map_.vertices();
  in.darts = map_.darts();
  in.rotation = map_.rotations();
  in.ends = ends_;
  in.depth = depth_;
  in.axis_orientation = axis_orientation_;
  return in;
}

SpeiserGraph build_graph(std::vector<MapVertex> vertices,
                         std::vector<Dart> darts,
                         std::vector<std::vector<int>> rotation,
                         BasePointSet base) {
  GraphInput in;
  in.vertices = std::move(vertices);
  in.darts = std::move(darts);
  in.rotation = std::move(rotation);
  return SpeiserGraph::Build(std::move(base), std::move(in));
}

}  // namespace speiser
