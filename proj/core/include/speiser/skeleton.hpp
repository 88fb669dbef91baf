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

#ifndef SPEISER_SKELETON_HPP_
#define SPEISER_SKELETON_HPP_

#include "speiser/speiser_graph.hpp"
#include "speiser/speiser_tree.hpp"

namespace speiser {

// Collapses every bundle of parallel edges to a single edge. Vertex ids are
// kept; end ids follow the graph's end descriptors. Throws Error(kNotATree)
// when the collapsed graph still has a cycle.
SpeiserTree skeleton_tree(const SpeiserGraph& graph);

}  // namespace speiser

#endif  // SPEISER_SKELETON_HPP_
