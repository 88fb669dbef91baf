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

#include "speiser/involution.hpp"

#include <sstream>
#include <utility>

namespace speiser {
namespace {

void Fail(PropertyResult& r, Witness::Kind kind, int id, std::string detail) {
  r.passed = false;
  r.witnesses.push_back(Witness{kind, id, std::move(detail)});
}

// Extends d0 -> image to the whole map via s(twin d) = twin(s d) and
// s(succ d) = pred(s d). Empty on contradiction.
std::vector<int> Propagate(const LabeledMap& m, int d0, int image) {
  const int n = m.dart_count();
  std::vector<int> s(n, -1);
  std::vector<int> used(n, -1);
  std::vector<int> stack{d0};
  s[d0] = image;
  used[image] = d0;
  auto assign = [&](int d, int e) {
    if (s[d] == -1) {
      if (used[e] != -1) return false;
      s[d] = e;
      used[e] = d;
      stack.push_back(d);
      return true;
    }
    return s[d] == e;
  };
  while (!stack.empty()) {
    const int d = stack.back();
    stack.pop_back();
    const int e = s[d];
    if (m.is_stub(d) != m.is_stub(e)) return {};
    if (m.vertex(m.dart(d).vertex).parity != m.vertex(m.dart(e).vertex).parity ||
        m.degree(m.dart(d).vertex) != m.degree(m.dart(e).vertex)) {
      return {};
    }
    if (!assign(m.succ(d), m.pred(e))) return {};
    if (!m.is_stub(d) && !assign(m.twin(d), m.twin(e))) return {};
  }
  for (int v : s) {
    if (v == -1) return {};
  }
  return s;
}

}  // namespace

std::optional<Involution> involution_from_darts(const SpeiserGraph& graph,
                                                std::vector<int> dart_map) {
  const LabeledMap& m = graph.map();
  const int n = m.dart_count();
  if (static_cast<int>(dart_map.size()) != n) return std::nullopt;
  Involution s;
  s.vertex_map.assign(m.vertex_count(), -1);
  s.end_map.assign(graph.ends().size(), -1);
  s.face_map.assign(graph.faces().size(), -1);
  std::vector<bool> hit(n, false);
  for (int d = 0; d < n; ++d) {
    const int e = dart_map[d];
    if (e < 0 || e >= n || hit[e] || m.is_stub(d) != m.is_stub(e)) {
      return std::nullopt;
    }
    hit[e] = true;
    int& vm = s.vertex_map[m.dart(d).vertex];
    if (vm != -1 && vm != m.dart(e).vertex) return std::nullopt;
    vm = m.dart(e).vertex;
    if (m.is_stub(d)) s.end_map[m.dart(d).end] = m.dart(e).end;
    int& fm = s.face_map[graph.face_of(d)];
    const int image_face = graph.face_of(m.succ(e));
    if (fm != -1 && fm != image_face) return std::nullopt;
    fm = image_face;
  }
  s.dart_map = std::move(dart_map);
  return s;
}

bool SymmetryReport::passed() const {
  return involutive.passed && parity.passed && orientation.passed &&
         labels.passed && fixed_locus.passed && property_a.passed &&
         property_b.passed;
}

std::string SymmetryReport::Describe() const {
  std::ostringstream out;
  auto line = [&](const char* name, const PropertyResult& r) {
    out << name << ": " << (r.passed ? "pass" : "FAIL");
    if (!r.passed && !r.witnesses.empty()) {
      out << " (" << r.witnesses.front().detail << ")";
    }
    out << "\n";
  };
  line("involutive", involutive);
  line("parity", parity);
  line("orientation", orientation);
  line("labels", labels);
  line("fixed locus", fixed_locus);
  line("property A", property_a);
  line("property B", property_b);
  return out.str();
}

SymmetryReport check_symmetry(const SpeiserGraph& graph, const Involution& s) {
  SymmetryReport r;
  const LabeledMap& m = graph.map();
  const BasePointSet& base = graph.base();
  const auto V = Witness::Kind::kVertex;
  const auto E = Witness::Kind::kEdge;

  for (int d = 0; d < m.dart_count(); ++d) {
    const int e = s.dart_map[d];
    const int v = m.dart(d).vertex;
    if (s.dart_map[e] != d) {
      Fail(r.involutive, V, v, "half-edge " + std::to_string(d) +
                                   " is not returned by s o s");
    }
    if (m.vertex(v).parity != m.vertex(m.dart(e).vertex).parity) {
      Fail(r.parity, V, v, "v" + std::to_string(v) + " changes parity");
    }
    if (s.dart_map[m.succ(d)] != m.pred(e) ||
        (!m.is_stub(d) && s.dart_map[m.twin(d)] != m.twin(e))) {
      Fail(r.orientation, V, v,
           "rotation at v" + std::to_string(v) + " is not reversed");
    }
    const LabelId want = base.symmetric() ? base.Conjugate(m.label(d)) : kNoLabel;
    if (want == kNoLabel || m.label(m.succ(e)) != want) {
      Fail(r.labels, Witness::Kind::kFace, graph.face_of(d),
           "face of half-edge " + std::to_string(d) +
               " is not mapped to a conjugate label");
    }
    if (!m.is_stub(d) && e == m.twin(d)) {
      Fail(r.property_b, E, graph.edge_of(d),
           "edge " + std::to_string(graph.edge_of(d)) + " crosses the axis");
    }
  }
  for (int v = 0; v < m.vertex_count(); ++v) {
    if (s.fixes_vertex(v) != m.vertex(v).on_axis) {
      Fail(r.fixed_locus, V, v,
           "v" + std::to_string(v) +
               (m.vertex(v).on_axis ? " is on the axis but moved"
                                    : " is fixed but off the axis"));
    }
  }
  for (std::size_t k = 0; k < graph.ends().size(); ++k) {
    const EndDescriptor& end = graph.ends()[k];
    bool meets = s.dart_map[end.stub] == end.stub;
    bool inside = meets;
    for (int v : end.path) {
      const bool on = m.vertex(v).on_axis || s.fixes_vertex(v);
      meets = meets || on;
      inside = inside && on;
    }
    if (end.path.empty()) inside = meets;
    if (meets && !inside) {
      Fail(r.property_a, V, m.dart(end.stub).vertex,
           "end" + std::to_string(k) + " meets the axis without lying in it");
    }
  }
  return r;
}

std::optional<Involution> find_involution(const SpeiserGraph& graph) {
  const LabeledMap& m = graph.map();
  if (m.dart_count() == 0 || !graph.base().symmetric()) return std::nullopt;
  for (int image = 0; image < m.dart_count(); ++image) {
    std::vector<int> darts = Propagate(m, 0, image);
    if (darts.empty()) continue;
    auto s = involution_from_darts(graph, std::move(darts));
    if (s && check_symmetry(graph, *s).passed()) return s;
  }
  return std::nullopt;
}

}  // namespace speiser
