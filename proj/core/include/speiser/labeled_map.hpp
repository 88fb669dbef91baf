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

#ifndef SPEISER_LABELED_MAP_HPP_
#define SPEISER_LABELED_MAP_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "speiser/base_points.hpp"

namespace speiser {

enum class Parity : std::uint8_t { kCross, kCircle };

inline Parity Opposite(Parity p) {
  return p == Parity::kCross ? Parity::kCircle : Parity::kCross;
}
inline char ParityChar(Parity p) { return p == Parity::kCross ? 'x' : 'o'; }

struct MapVertex {
  Parity parity = Parity::kCross;
  bool on_axis = false;
};

inline constexpr int kStub = -1;

// A half-edge. Stub darts (twin == kStub) point into a logarithmic end that
// continues beyond the stored part of the graph.
struct Dart {
  int vertex = 0;
  int twin = kStub;
  int end = -1;  // end id for stubs, -1 otherwise
  // Label of the face on the right of the dart, i.e. of the corner just
  // before it in the anticlockwise rotation at its vertex.
  LabelId label = kNoLabel;
};

// A closed walk (bounded face) or an open walk running from one end stub to
// the next (unbounded face). Walks follow next(d) = succ(twin(d)).
struct FaceWalk {
  std::vector<int> darts;
  bool closed = true;
};

// Rotation system over half-edges: the embedded-graph core shared by
// Speiser trees and Speiser graphs.
class LabeledMap {
 public:
  LabeledMap() = default;

  // Throws Error(kDanglingHalfEdge) when a non-stub dart has no valid twin,
  // Error(kInvalidArgument) when rotations are not permutations of the darts
  // incident to each vertex.
  LabeledMap(std::vector<MapVertex> vertices, std::vector<Dart> darts,
             std::vector<std::vector<int>> rotation);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int dart_count() const { return static_cast<int>(darts_.size()); }
  const std::vector<MapVertex>& vertices() const { return vertices_; }
  const std::vector<Dart>& darts() const { return darts_; }
  const MapVertex& vertex(int v) const { return vertices_[v]; }
  const Dart& dart(int d) const { return darts_[d]; }
  std::span<const int> rotation(int v) const { return rotation_[v]; }
  const std::vector<std::vector<int>>& rotations() const { return rotation_; }
  int degree(int v) const { return static_cast<int>(rotation_[v].size()); }

  bool is_stub(int d) const { return darts_[d].twin == kStub; }
  int twin(int d) const { return darts_[d].twin; }
  int succ(int d) const;
  int pred(int d) const;
  LabelId label(int d) const { return darts_[d].label; }
  // Label of the corner after d (the face on the left of d).
  LabelId left_label(int d) const { return darts_[succ(d)].label; }

  // Open walks first (one per stub, in stub order), then closed walks in
  // order of their smallest dart. face_of[d] indexes the returned vector.
  std::vector<FaceWalk> TraceFaces(std::vector<int>* face_of) const;

  bool IsConnected() const;

  std::vector<Dart>& mutable_darts() { return darts_; }
  std::vector<MapVertex>& mutable_vertices() { return vertices_; }

 private:
  std::vector<MapVertex> vertices_;
  std::vector<Dart> darts_;
  std::vector<std::vector<int>> rotation_;
  std::vector<int> slot_;  // position of each dart inside its rotation
};

// Canonical code of the map as seen from `root`, walking rotations
// anticlockwise (mirror == false) or clockwise. Two connected maps are
// isomorphic iff some root pair yields equal codes. `label_key` translates
// a label id into a comparable key (e.g. an index into a shared name table).
std::vector<std::int64_t> CanonicalCode(const LabeledMap& map, int root,
                                        bool mirror,
                                        std::span<const std::int64_t> label_key);

}  // namespace speiser

#endif  // SPEISER_LABELED_MAP_HPP_
