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

#include "speiser/dot_export.hpp"

#include "speiser/errors.hpp"

namespace speiser {
namespace {

std::string Quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string Name(const BasePointSet& base, LabelId l) {
  return l == kNoLabel ? "?" : base.label(l).name;
}

// Shared body: vertices, then one line per non-stub dart pair and per stub.
std::string Render(const char* title, const LabeledMap& map,
                   const BasePointSet& base) {
  if (map.vertex_count() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "nothing to export: no vertices");
  }
  std::string out = std::string("graph ") + title + " {\n";
  out += "  node [fontname=\"Helvetica\"];\n";
  for (int v = 0; v < map.vertex_count(); ++v) {
    const MapVertex& mv = map.vertex(v);
    out += "  v" + std::to_string(v) + " [shape=" +
           (mv.parity == Parity::kCross ? "box" : "circle") + ", label=\"v" +
           std::to_string(v) + "\"" + (mv.on_axis ? ", penwidth=2" : "") +
           "];\n";
  }
  for (int d = 0; d < map.dart_count(); ++d) {
    const int v = map.dart(d).vertex;
    const std::string faces =
        Quote(Name(base, map.left_label(d)) + "|" + Name(base, map.label(d)));
    if (map.is_stub(d)) {
      const std::string end = "end" + std::to_string(map.dart(d).end);
      out += "  " + end + " [shape=point];\n";
      out += "  v" + std::to_string(v) + " -- " + end + " [label=" + faces +
             ", style=dashed];\n";
      continue;
    }
    const int t = map.twin(d);
    if (t < d) continue;
    const int u = map.dart(t).vertex;
    const bool axis = map.vertex(v).on_axis && map.vertex(u).on_axis;
    out += "  v" + std::to_string(v) + " -- v" + std::to_string(u) +
           " [label=" + faces + (axis ? ", style=bold" : "") + "];\n";
  }
  return out + "}\n";
}

}  // namespace

std::string export_dot(const SpeiserTree& tree) {
  return Render("speiser_tree", tree.map(), tree.base());
}

std::string export_dot(const SpeiserGraph& graph) {
  return Render("speiser_graph", graph.map(), graph.base());
}

}  // namespace speiser
