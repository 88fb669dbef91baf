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

#ifndef SPEISER_AXIOMS_HPP_
#define SPEISER_AXIOMS_HPP_

#include <array>
#include <string>
#include <vector>

#include "speiser/speiser_graph.hpp"

namespace speiser {

struct Witness {
  enum class Kind { kVertex, kEdge, kFace };
  Kind kind = Kind::kVertex;
  int id = 0;
  std::string detail;
};

struct PropertyResult {
  bool passed = true;
  std::vector<Witness> witnesses;
};

// Outcome of checking the five Speiser graph properties:
//   1. bipartite by parity,
//   2. q faces with q distinct labels around every vertex,
//   3. labels in cyclic order (anticlockwise at cross, reversed at circle),
//   4. every bounded face is a 2-gon,
//   5. finitely many unbounded faces, one per end.
// Properties 2 and 3 are evaluated on interior vertices only.
struct AxiomReport {
  std::array<PropertyResult, 5> property;
  std::vector<int> unchecked_vertices;

  bool passed() const;
  const PropertyResult& operator[](int p) const { return property[p - 1]; }
  std::string Describe() const;
};

AxiomReport validate_axioms(const SpeiserGraph& graph);

}  // namespace speiser

#endif  // SPEISER_AXIOMS_HPP_
