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

#ifndef SPEISER_EXTENSION_HPP_
#define SPEISER_EXTENSION_HPP_

#include <vector>

#include "speiser/speiser_graph.hpp"
#include "speiser/speiser_tree.hpp"

namespace speiser {

// Bundle sizes of the rotation items at tree vertex v: each item flanked by
// faces with labels at cyclic positions i (before) and j (after) becomes a
// bundle of (j - i) mod q parallel edges at a cross vertex, (i - j) mod q at
// a circle vertex. Throws Error(kZeroGap) if two adjacent faces share a
// position and Error(kWindingMismatch) if the gaps do not sum to q.
std::vector<int> item_gaps(const SpeiserTree& tree, int v);

// The unique Speiser graph whose skeleton is `tree`, truncated after
// `depth` periods of every logarithmic end.
SpeiserGraph extend_tree(const SpeiserTree& tree, int depth);

}  // namespace speiser

#endif  // SPEISER_EXTENSION_HPP_
