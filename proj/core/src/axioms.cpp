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

#include "speiser/axioms.hpp"

#include <sstream>

namespace speiser {
namespace {

void Fail(PropertyResult& r, Witness::Kind kind, int id, std::string detail) {
  r.passed = false;
  r.witnesses.push_back(Witness{kind, id, std::move(detail)});
}

const char* KindName(Witness::Kind k) {
  switch (k) {
    case Witness::Kind::kVertex: return "v";
    case Witness::Kind::kEdge: return "edge ";
    case Witness::Kind::kFace: return "face ";
  }
  return "";
}

}  // namespace

bool AxiomReport::passed() const {
  for (const PropertyResult& r : property) {
    if (!r.passed) return false;
  }
  return true;
}

std::string AxiomReport::Describe() const {
  std::ostringstream out;
  for (int p = 1; p <= 5; ++p) {
    const PropertyResult& r = property[p - 1];
    out << "property " << p << ": " << (r.passed ? "pass" : "FAIL");
    if (!r.passed) {
      out << " (";
      for (std::size_t i = 0; i < r.witnesses.size() && i < 3; ++i) {
        if (i) out << "; ";
        out << KindName(r.witnesses[i].kind) << r.witnesses[i].id;
        if (!r.witnesses[i].detail.empty()) {
          out << ": " << r.witnesses[i].detail;
        }
      }
      if (r.witnesses.size() > 3) out << "; ...";
      out << ")";
    }
    out << "\n";
  }
  out << "unchecked boundary vertices: " << unchecked_vertices.size() << "\n";
  return out.str();
}

AxiomReport validate_axioms(const SpeiserGraph& graph) {
  AxiomReport report;
  const LabeledMap& m = graph.map();
  const BasePointSet& base = graph.base();
  const int q = base.q();

  for (std::size_t e = 0; e < graph.edges().size(); ++e) {
    const GraphEdge& edge = graph.edges()[e];
    if (m.vertex(m.dart(edge.dart).vertex).parity ==
        m.vertex(m.dart(edge.twin).vertex).parity) {
      Fail(report.property[0], Witness::Kind::kEdge, static_cast<int>(e),
           "joins two vertices of equal parity");
    }
  }

  for (int v = 0; v < m.vertex_count(); ++v) {
    if (!graph.interior(v)) {
      report.unchecked_vertices.push_back(v);
      continue;
    }
    const auto rot = m.rotation(v);
    std::vector<int> seen(q, 0);
    std::vector<int> faces;
    bool distinct = true;
    for (int d : rot) {
      const int pos = base.position(m.label(d));
      if (seen[pos]++) distinct = false;
    }
    if (static_cast<int>(rot.size()) != q || !distinct) {
      Fail(report.property[1], Witness::Kind::kVertex, v,
           std::to_string(rot.size()) + " corners, labels " +
               (distinct ? "distinct" : "repeated"));
    }
    const int step = m.vertex(v).parity == Parity::kCross ? 1 : q - 1;
    for (int d : rot) {
      const int here = base.position(m.label(d));
      const int next = base.position(m.left_label(d));
      if ((here + step) % q != next) {
        Fail(report.property[2], Witness::Kind::kVertex, v,
             "label " + base.label(m.label(d)).name + " followed by " +
                 base.label(m.left_label(d)).name);
        break;
      }
    }
  }

  for (std::size_t f = 0; f < graph.faces().size(); ++f) {
    const GraphFace& face = graph.faces()[f];
    if (face.kind == FaceKind::kBounded) {
      Fail(report.property[3], Witness::Kind::kFace, static_cast<int>(f),
           std::to_string(face.edge_count()) + "-gon");
    }
  }

  const int unbounded = graph.unbounded_face_count();
  if (unbounded != static_cast<int>(graph.ends().size())) {
    Fail(report.property[4], Witness::Kind::kFace, unbounded,
         "unbounded faces differ from the number of ends");
  }
  return report;
}

}  // namespace speiser
