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

#ifndef SPEISER_ALMOST_SYMMETRIC_HPP_
#define SPEISER_ALMOST_SYMMETRIC_HPP_

#include "speiser/speiser_tree.hpp"

namespace speiser {

struct AlmostSymmetricReport {
  int crossing_edge = -1;  // the tree edge {u, s(u)}
  int real_zero_bound = 1;
};

// Audits a tree whose stored involution swaps parities (the two vertices of
// the sphere graph sit at conjugate non-real points and every base point is
// real). Throws Error(kNotAlmostSymmetric) unless no vertex is on the axis
// and exactly one edge joins a vertex to its mirror image.
AlmostSymmetricReport almost_symmetric_audit(const SpeiserTree& tree);

}  // namespace speiser

#endif  // SPEISER_ALMOST_SYMMETRIC_HPP_
