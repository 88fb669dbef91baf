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

#ifndef SPEISER_SPLIT_HPP_
#define SPEISER_SPLIT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "speiser/involution.hpp"
#include "speiser/speiser_graph.hpp"

namespace speiser {

// Rebuilds `graph` over `base` with face f labeled by the name face_names[f].
SpeiserGraph relabel_faces(const SpeiserGraph& graph, const BasePointSet& base,
                           const std::vector<std::string>& face_names);

// Which half of the axis complement receives the "+" label.
enum class SideAssignment { kLowestFacePlus, kLowestFaceMinus };

// Pushes the real label `name` off the axis: faces on one side become
// name+, their mirror images name-. Throws kRealSingularityOverLabel when
// an unbounded face over `name` meets the axis or flanks an axial end, and
// kFaceOnAxis when a bounded face over `name` is bisected.
SpeiserGraph split_real_label(
    const SpeiserGraph& graph, std::string_view name,
    SideAssignment side = SideAssignment::kLowestFacePlus);
SpeiserGraph split_real_label(const SpeiserGraph& graph, const Involution& s,
                              std::string_view name, SideAssignment side);

// Inverse of split_real_label.
SpeiserGraph merge_split_label(const SpeiserGraph& graph,
                               std::string_view base_name);

// Connected components of the faces off the axis; faces fixed by s get -1.
std::vector<int> side_components(const SpeiserGraph& graph,
                                 const Involution& s);

}  // namespace speiser

#endif  // SPEISER_SPLIT_HPP_
