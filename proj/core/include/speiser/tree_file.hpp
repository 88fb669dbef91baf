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

#ifndef SPEISER_TREE_FILE_HPP_
#define SPEISER_TREE_FILE_HPP_

#include <string>
#include <string_view>

#include "speiser/base_points.hpp"
#include "speiser/speiser_tree.hpp"

namespace speiser {

// Line-based text form of a SpeiserTree:
//
//   speiser-tree v1
//   basepoints: 0=0+0i,a=1+1i,a~=1-1i
//   axis-orientation: v1 -> v0
//   vertex: 0 x 1
//   edge: 0 v0 v1
//   rotation: v0: e0,end1
//   end: 0 at v1 flank(a~,a) axial(1)
//   involution: v0<->v0
//   involution: end0<->end2
//
// Sections may appear in any order; `#` starts a comment. Errors carry the
// line number: kSyntaxError for malformed text, kInvariantViolation for
// well-formed text that does not describe a valid tree.
SpeiserTree parse_tree_file(std::string_view text);

// Canonical form: sections in the order above, ids ascending, numbers in
// shortest round-trip notation.
std::string serialize_tree(const SpeiserTree& tree);

// Complex literals `re`, `re+imi`, `re-imi`, `imi`, and `inf`.
std::string format_complex(const ExtendedComplex& z);
ExtendedComplex parse_complex(std::string_view text);

}  // namespace speiser

#endif  // SPEISER_TREE_FILE_HPP_
