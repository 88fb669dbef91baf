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

#ifndef SPEISER_INVOLUTION_HPP_
#define SPEISER_INVOLUTION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "speiser/axioms.hpp"
#include "speiser/speiser_graph.hpp"

namespace speiser {

// Orientation-reversing symmetry of a Speiser graph. dart_map is the
// primary data; the other maps are induced by it.
struct Involution {
  std::vector<int> dart_map;
  std::vector<int> vertex_map;
  std::vector<int> end_map;
  std::vector<int> face_map;

  bool fixes_vertex(int v) const { return vertex_map[v] == v; }
  bool fixes_face(int f) const { return face_map[f] == f; }
};

// Derives vertex, end and face maps from a dart map. Returns nullopt when
// the dart map is not a bijection or mixes vertices, stubs or faces
// inconsistently.
std::optional<Involution> involution_from_darts(const SpeiserGraph& graph,
                                                std::vector<int> dart_map);

struct SymmetryReport {
  PropertyResult involutive;     // s o s = id
  PropertyResult parity;         // cross -> cross, circle -> circle
  PropertyResult orientation;    // rotations reversed, pairing kept
  PropertyResult labels;         // face labels conjugated
  PropertyResult fixed_locus;    // fixed vertices == on-axis vertices
  PropertyResult property_a;     // an end meeting the axis lies in it
  PropertyResult property_b;     // no edge crosses the axis transversally

  bool passed() const;
  std::string Describe() const;
};

SymmetryReport check_symmetry(const SpeiserGraph& graph, const Involution& s);

// First involution (in order of the image of half-edge 0) passing every
// check_symmetry test, or nullopt. The base set must be symmetric.
std::optional<Involution> find_involution(const SpeiserGraph& graph);

}  // namespace speiser

#endif  // SPEISER_INVOLUTION_HPP_
