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

#ifndef SPEISER_TESTS_FIXTURES_HPP_
#define SPEISER_TESTS_FIXTURES_HPP_

#include <string>

#include "speiser/catalog.hpp"
#include "speiser/extension.hpp"
#include "speiser/speiser_graph.hpp"
#include "speiser/tree_file.hpp"

namespace speiser::testing {

// One cross vertex on the axis with two axial ends over {0, a, a~}: the
// graph of sin, zeros on both halves of the axis.
inline const char* kLadder = R"(speiser-tree v1
basepoints: 0=0+0i,a=1+1i,a~=1-1i
vertex: 0 x 1
rotation: v0: end0,end1
end: 0 at v0 flank(a,a~) axial(1)
end: 1 at v0 flank(a~,a) axial(1)
involution: v0<->v0
involution: end0<->end0
involution: end1<->end1
)";

// Two ends over {0, inf}, q = 2: the graph of exp.
inline const char* kExpPath = R"(speiser-tree v1
basepoints: 0=0+0i,inf=inf
vertex: 0 x 0
rotation: v0: end0,end1
end: 0 at v0 flank(0,inf) axial(0)
end: 1 at v0 flank(inf,0) axial(0)
)";

// Almost-symmetric tree: real base points, s swaps u and v.
inline const char* kAlmostSymmetric = R"(speiser-tree v1
basepoints: 0=0,1=1,2=2
vertex: 0 x 0
vertex: 1 o 0
edge: 0 v0 v1
rotation: v0: e0,end0,end1
rotation: v1: e0,end2,end3
end: 0 at v0 flank(1,0) axial(0)
end: 1 at v0 flank(2,1) axial(0)
end: 2 at v1 flank(1,2) axial(0)
end: 3 at v1 flank(0,1) axial(0)
involution: v0<->v1
involution: end0<->end3
involution: end1<->end2
)";

inline SpeiserTree Tree(const char* text) { return parse_tree_file(text); }

inline SpeiserGraph Infinite(int d, int depth) {
  return extend_tree(catalog_tree(d, CatalogVariant::Infinite()), depth);
}

inline SpeiserGraph Finite(int d, int k, int depth) {
  return extend_tree(catalog_tree(d, CatalogVariant::FiniteZeros(k)), depth);
}

}  // namespace speiser::testing

#endif  // SPEISER_TESTS_FIXTURES_HPP_
