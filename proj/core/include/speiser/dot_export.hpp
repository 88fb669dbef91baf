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

#ifndef SPEISER_DOT_EXPORT_HPP_
#define SPEISER_DOT_EXPORT_HPP_

#include <string>

#include "speiser/speiser_graph.hpp"
#include "speiser/speiser_tree.hpp"

namespace speiser {

// Graphviz text. Cross vertices are boxes, circle vertices circles, edges
// between on-axis vertices are bold, and every edge is labeled with the
// faces on its left and right as "left|right". Each logarithmic end is a
// point node. Output depends only on the input ids. Throws kInvalidArgument
// for a graph without vertices.
std::string export_dot(const SpeiserTree& tree);
std::string export_dot(const SpeiserGraph& graph);

}  // namespace speiser

#endif  // SPEISER_DOT_EXPORT_HPP_
