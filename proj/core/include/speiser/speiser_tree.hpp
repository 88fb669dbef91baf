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

#ifndef SPEISER_SPEISER_TREE_HPP_
#define SPEISER_SPEISER_TREE_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "speiser/base_points.hpp"
#include "speiser/labeled_map.hpp"

namespace speiser {

struct TreeVertex {
  Parity parity = Parity::kCross;
  bool on_axis = false;
};

struct TreeEdge {
  int u = 0;
  int v = 0;
};

struct RotationItem {
  enum class Kind { kEdge, kEnd };
  Kind kind = Kind::kEdge;
  int id = 0;

  static RotationItem Edge(int id) { return {Kind::kEdge, id}; }
  static RotationItem End(int id) { return {Kind::kEnd, id}; }
  friend bool operator==(const RotationItem&, const RotationItem&) = default;
};

// A logarithmic end, stored as a stub at `vertex`. Flanks are the labels of
// the unbounded faces on its left and right when looking outward.
struct TreeEnd {
  int vertex = 0;
  LabelId left = kNoLabel;
  LabelId right = kNoLabel;
  bool axial = false;
};

struct TreeInvolution {
  std::vector<int> vertex_map;
  std::vector<int> end_map;
};

struct AxisOrientation {
  int from = 0;
  int to = 0;
  friend bool operator==(const AxisOrientation&, const AxisOrientation&) =
      default;
};

// One unbounded face of the tree: the region between two consecutive ends.
struct TreeFace {
  LabelId label = kNoLabel;
  int from_end = 0;  // the face lies on the left of this end
  int to_end = 0;    // and on the right of this one
};

// Finite planar tree with logarithmic-end stubs: the compact form of the
// skeleton of a Speiser graph. Ids are dense indices.
class SpeiserTree {
 public:
  struct Parts {
    BasePointSet base;
    std::vector<TreeVertex> vertices;
    std::vector<TreeEdge> edges;
    std::vector<std::vector<RotationItem>> rotation;
    std::vector<TreeEnd> ends;
    std::optional<AxisOrientation> axis_orientation;
    std::optional<TreeInvolution> involution;
  };

  // Checks every tree invariant; throws Error(kInvariantViolation).
  static SpeiserTree Create(Parts parts);

  const BasePointSet& base() const { return parts_.base; }
  const std::vector<TreeVertex>& vertices() const { return parts_.vertices; }
  const std::vector<TreeEdge>& edges() const { return parts_.edges; }
  const std::vector<RotationItem>& rotation(int v) const {
    return parts_.rotation[v];
  }
  const std::vector<TreeEnd>& ends() const { return parts_.ends; }
  const std::optional<AxisOrientation>& axis_orientation() const {
    return parts_.axis_orientation;
  }
  const std::optional<TreeInvolution>& involution() const {
    return parts_.involution;
  }
  const Parts& parts() const { return parts_; }

  int vertex_count() const { return static_cast<int>(parts_.vertices.size()); }
  int end_count() const { return static_cast<int>(parts_.ends.size()); }
  int degree(int v) const { return static_cast<int>(parts_.rotation[v].size()); }
  int axial_end_count() const;

  // Unbounded faces in circular order around infinity.
  const std::vector<TreeFace>& faces() const { return faces_; }

  // Dart layout: edge e gives darts 2e (at u) and 2e+1 (at v); end k gives
  // stub dart 2*|E| + k. Labels are the corner labels read off the faces.
  const LabeledMap& map() const { return map_; }
  int EdgeDart(int edge, int at_vertex) const;
  int EndDart(int end) const { return 2 * static_cast<int>(parts_.edges.size()) + end; }

 private:
  explicit SpeiserTree(Parts parts) : parts_(std::move(parts)) {}

  Parts parts_;
  LabeledMap map_;
  std::vector<TreeFace> faces_;
};

struct LogarithmicEnds {
  int count = 0;
  std::vector<TreeEnd> ends;
};

// Number of logarithmic ends and their descriptors.
LogarithmicEnds logarithmic_ends(const SpeiserTree& tree);

// Degree of the polynomial attached to a surface with n ends: n - 2.
// Throws Error(kTooFewEnds) for n < 2.
int infer_degree(const SpeiserTree& tree);
int infer_degree(int end_count);

// Materializes `periods` periods (two vertices each) along every end and
// moves the stubs outward. This is the depth-K restriction of the infinite
// tree. path_vertices, when given, receives the new vertices per end.
SpeiserTree expand_ends(const SpeiserTree& tree, int periods,
                        std::vector<std::vector<int>>* path_vertices = nullptr);

}  // namespace speiser

#endif  // SPEISER_SPEISER_TREE_HPP_
