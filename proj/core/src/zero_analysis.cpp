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

#include "speiser/zero_analysis.hpp"

#include <algorithm>
#include <deque>

#include "speiser/errors.hpp"
#include "speiser/extension.hpp"

namespace speiser {
namespace {

LabelId RequireZero(const BasePointSet& base) {
  const auto zero = base.Zero();
  if (!zero) throw Error(ErrorCode::kNoZeroLabel, "0 is not a base point");
  return *zero;
}

bool HasSplitZero(const BasePointSet& base) {
  for (const BasePoint& p : base.labels()) {
    if (p.split != SplitSide::kNone && p.split_base == "0") return true;
  }
  return false;
}

Involution RequireInvolution(const SpeiserGraph& graph) {
  auto s = find_involution(graph);
  if (!s) throw Error(ErrorCode::kNoInvolution, "graph has no symmetry");
  return *s;
}

// Breadth-first distances restricted to on-axis vertices.
std::vector<int> AxisDistances(const LabeledMap& m, int source) {
  std::vector<int> dist(m.vertex_count(), -1);
  if (source < 0) return dist;
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int d : m.rotation(v)) {
      if (m.is_stub(d)) continue;
      const int u = m.dart(m.twin(d)).vertex;
      if (!m.vertex(u).on_axis || dist[u] != -1) continue;
      dist[u] = dist[v] + 1;
      queue.push_back(u);
    }
  }
  return dist;
}

// Signed axis coordinate of every on-axis vertex.
class AxisFrame {
 public:
  explicit AxisFrame(const SpeiserGraph& graph) {
    const LabeledMap& m = graph.map();
    int origin = -1;
    int toward = -1;
    if (graph.axis_orientation()) {
      origin = graph.axis_orientation()->from;
      toward = graph.axis_orientation()->to;
    } else {
      for (int v = 0; v < m.vertex_count() && origin < 0; ++v) {
        if (m.vertex(v).on_axis) origin = v;
      }
    }
    from_ = AxisDistances(m, origin);
    to_ = AxisDistances(m, toward);
    span_ = toward >= 0 ? from_[toward] : -1;
  }

  int Coordinate(int v) const {
    if (span_ >= 0 && to_[v] >= 0 && to_[v] == from_[v] + span_ && span_ > 0) {
      return -from_[v];
    }
    return from_[v];
  }
  // True when v lies on the side of the axis the orientation points to.
  bool Positive(int v) const {
    if (span_ < 0 || to_[v] < 0) return true;
    return to_[v] < from_[v];
  }

 private:
  std::vector<int> from_;
  std::vector<int> to_;
  int span_ = -1;
};

ZeroCensus Census(const SpeiserGraph& graph) {
  const LabeledMap& m = graph.map();
  const AxisFrame frame(graph);
  ZeroCensus census;
  for (const ZeroFace& z : zero_faces(graph)) {
    ++census.count;
    if (!z.on_axis) continue;
    const auto& darts = graph.faces()[z.face].darts;
    census.positions.push_back(frame.Coordinate(m.dart(darts[0]).vertex) +
                               frame.Coordinate(m.dart(darts[1]).vertex));
  }
  std::sort(census.positions.begin(), census.positions.end());
  return census;
}

}  // namespace

std::vector<ZeroFace> zero_faces(const SpeiserGraph& graph) {
  const LabelId zero = RequireZero(graph.base());
  const LabeledMap& m = graph.map();
  std::vector<ZeroFace> out;
  for (std::size_t f = 0; f < graph.faces().size(); ++f) {
    const GraphFace& face = graph.faces()[f];
    if (face.kind != FaceKind::kTwoGon || face.label != zero) continue;
    bool on_axis = true;
    for (int d : face.darts) on_axis = on_axis && m.vertex(m.dart(d).vertex).on_axis;
    out.push_back(ZeroFace{static_cast<int>(f), on_axis});
  }
  return out;
}

bool AssumptionsReport::passed() const {
  int nonzero = 0;
  for (const RealSingularity& r : real_log_singularities) {
    nonzero += r.label != "0";
  }
  return ends_at_least_three && zero_is_base_point && no_split_zero_labels &&
         nonzero <= 1;
}

AssumptionsReport check_assumptions(const SpeiserGraph& graph,
                                    const Involution& s) {
  const BasePointSet& base = graph.base();
  AssumptionsReport r;
  r.ends_at_least_three = graph.ends().size() >= 3;
  r.zero_is_base_point = base.Zero().has_value();
  r.no_split_zero_labels = !HasSplitZero(base);
  for (std::size_t f = 0; f < graph.faces().size(); ++f) {
    const GraphFace& face = graph.faces()[f];
    if (face.kind == FaceKind::kUnbounded && s.fixes_face(static_cast<int>(f))) {
      r.real_log_singularities.push_back(
          {base.label(face.label).name, RealSingularityKind::kBisectedFace});
    }
  }
  for (const EndDescriptor& end : graph.ends()) {
    if (!end.axial) continue;
    const BasePoint& left = base.label(end.left);
    if (left.split != SplitSide::kNone) {
      r.real_log_singularities.push_back(
          {left.split_base, RealSingularityKind::kAxialFlankPair});
    }
  }
  int nonzero = 0;
  for (const RealSingularity& rs : r.real_log_singularities) {
    nonzero += rs.label != "0";
  }
  r.two_nonzero_real_singularities = nonzero >= 2;
  return r;
}

AssumptionsReport check_assumptions(const SpeiserGraph& graph) {
  return check_assumptions(graph, RequireInvolution(graph));
}

CriterionResult all_zeros_real(const SpeiserGraph& graph) {
  return all_zeros_real(graph, RequireInvolution(graph));
}

CriterionResult all_zeros_real(const SpeiserGraph& graph, const Involution& s) {
  const LabelId zero = RequireZero(graph.base());
  if (HasSplitZero(graph.base())) {
    throw Error(ErrorCode::kSplitZeroLabel, "base points contain 0+ or 0-");
  }
  const LabeledMap& m = graph.map();
  CriterionResult result;
  result.criterion = true;
  for (int v = 0; v < m.vertex_count(); ++v) {
    if (m.vertex(v).on_axis) continue;
    bool on_zero_face = false;
    for (int d : m.rotation(v)) {
      const GraphFace& face = graph.faces()[graph.face_of(d)];
      if (face.kind == FaceKind::kUnbounded && face.label == zero) {
        on_zero_face = true;
        break;
      }
    }
    if (!on_zero_face) {
      result.criterion = false;
      result.witness = v;
      break;
    }
  }
  result.equivalence = check_assumptions(graph, s).passed();
  return result;
}

std::string ZeroSetClass::Token() const {
  switch (kind) {
    case Kind::kFiniteCount: return "finite:" + std::to_string(count);
    case Kind::kUnboundedBothDirections: return "unbounded-both";
    case Kind::kRayPositive: return "ray-positive";
    case Kind::kRayNegative: return "ray-negative";
    case Kind::kNotAllReal: return "not-all-real";
  }
  return "";
}

ZeroSetClass classify_zero_set(const SpeiserGraph& graph) {
  const Involution s = RequireInvolution(graph);
  ZeroSetClass c;
  if (check_assumptions(graph, s).two_nonzero_real_singularities) {
    c.kind = ZeroSetClass::Kind::kFiniteCount;
    c.count = Census(graph).count;
    return c;
  }
  const CriterionResult crit = all_zeros_real(graph, s);
  if (!crit.criterion) {
    c.kind = ZeroSetClass::Kind::kNotAllReal;
    c.witness = crit.witness;
    return c;
  }
  std::vector<const EndDescriptor*> axial;
  for (const EndDescriptor& end : graph.ends()) {
    if (end.axial) axial.push_back(&end);
  }
  if (axial.size() >= 2) {
    c.kind = ZeroSetClass::Kind::kUnboundedBothDirections;
  } else if (axial.size() == 1) {
    const AxisFrame frame(graph);
    const int tip = graph.map().dart(axial.front()->stub).vertex;
    c.kind = frame.Positive(tip) ? ZeroSetClass::Kind::kRayPositive
                                 : ZeroSetClass::Kind::kRayNegative;
  } else {
    c.kind = ZeroSetClass::Kind::kFiniteCount;
    c.count = Census(graph).count;
  }
  return c;
}

ZeroCensus zero_census(const SpeiserGraph& graph) {
  if (!all_zeros_real(graph).criterion) {
    throw Error(ErrorCode::kCriterionFailed,
                "zeros are not all real; census is undefined");
  }
  return Census(graph);
}

ZeroCensus zero_census(const SpeiserTree& tree, int depth) {
  return zero_census(extend_tree(tree, depth));
}

}  // namespace speiser
