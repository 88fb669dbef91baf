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

#ifndef SPEISER_SPEISER_GRAPH_HPP_
#define SPEISER_SPEISER_GRAPH_HPP_

#include <optional>
#include <vector>

#include "speiser/base_points.hpp"
#include "speiser/labeled_map.hpp"
#include "speiser/speiser_tree.hpp"

namespace speiser {

enum class FaceKind { kTwoGon, kBounded, kUnbounded };

struct GraphFace {
  std::vector<int> darts;
  FaceKind kind = FaceKind::kTwoGon;
  LabelId label = kNoLabel;
  int edge_count() const { return static_cast<int>(darts.size()); }
};

struct GraphEdge {
  int dart = 0;  // the smaller dart id of the pair
  int twin = 0;
};

// Periodic description of a logarithmic end beyond the truncation: bundles
// along the end alternate between `outward_bundle` and `inward_bundle`
// parallel edges (counted from a cross vertex looking outward).
struct EndDescriptor {
  int attach_vertex = 0;          // vertex of the finite core
  std::vector<int> path;          // materialized end vertices, outward
  int stub = 0;                   // stub dart at the last vertex
  LabelId left = kNoLabel;
  LabelId right = kNoLabel;
  bool axial = false;
  int cross_bundle = 0;  // bundle size leaving a cross vertex outward
  int circle_bundle = 0;  // bundle size leaving a circle vertex outward
};

// Raw input for build_graph.
struct GraphInput {
  std::vector<MapVertex> vertices;
  // Dart labels act as face seeds; kNoLabel leaves the face to be labeled
  // by other darts on it or by the end flanks.
  std::vector<Dart> darts;
  std::vector<std::vector<int>> rotation;
  // One descriptor per end id used by stub darts. Missing flank labels are
  // read off the faces after labeling.
  std::vector<EndDescriptor> ends;
  int depth = 0;
  std::optional<AxisOrientation> axis_orientation;
};

// Depth-K truncation of a Speiser graph: finite core plus K periods of every
// logarithmic end, each end closed off by a stub.
class SpeiserGraph {
 public:
  // Traces and labels faces. Throws Error(kDanglingHalfEdge) for unpaired
  // half-edges and Error(kUnlabelableFace) when a face has no label or two
  // conflicting ones.
  static SpeiserGraph Build(BasePointSet base, GraphInput input);

  const BasePointSet& base() const { return base_; }
  int depth() const { return depth_; }
  const LabeledMap& map() const { return map_; }
  int vertex_count() const { return map_.vertex_count(); }
  const MapVertex& vertex(int v) const { return map_.vertex(v); }

  const std::vector<GraphFace>& faces() const { return faces_; }
  int face_of(int dart) const { return face_of_[dart]; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  int edge_of(int dart) const { return edge_of_[dart]; }
  const std::vector<EndDescriptor>& ends() const { return ends_; }
  const std::optional<AxisOrientation>& axis_orientation() const {
    return axis_orientation_;
  }

  // Boundary vertices carry a stub; properties that need the full star of a
  // vertex are only checked on interior vertices.
  bool interior(int v) const { return interior_[v]; }

  int unbounded_face_count() const;
  // Exports the graph back to raw input form (labels on every dart).
  GraphInput ToInput() const;

 private:
  BasePointSet base_;
  int depth_ = 0;
  LabeledMap map_;
  std::vector<GraphFace> faces_;
  std::vector<int> face_of_;
  std::vector<GraphEdge> edges_;
  std::vector<int> edge_of_;
  std::vector<EndDescriptor> ends_;
  std::vector<bool> interior_;
  std::optional<AxisOrientation> axis_orientation_;
};

// Builds a graph from rotations and pairings (see SpeiserGraph::Build).
SpeiserGraph build_graph(std::vector<MapVertex> vertices,
                         std::vector<Dart> darts,
                         std::vector<std::vector<int>> rotation,
                         BasePointSet base);

}  // namespace speiser

#endif  // SPEISER_SPEISER_GRAPH_HPP_
