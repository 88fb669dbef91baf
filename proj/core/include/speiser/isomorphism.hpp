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

#ifndef SPEISER_ISOMORPHISM_HPP_
#define SPEISER_ISOMORPHISM_HPP_

#include <map>
#include <string>

#include "speiser/speiser_graph.hpp"
#include "speiser/speiser_tree.hpp"

namespace speiser {

// Label renaming from the second argument's names to the first's. Names
// missing from the map are kept as they are.
using LabelRenaming = std::map<std::string, std::string>;

// Isomorphism up to a global orientation flip, preserving parity, axis
// flags, pairing and face labels. Decided by canonical codes from a fixed
// root of g1 against every root of g2.
bool is_isomorphic(const SpeiserGraph& g1, const SpeiserGraph& g2,
                   const LabelRenaming& renaming = {});
bool is_isomorphic(const SpeiserTree& t1, const SpeiserTree& t2,
                   const LabelRenaming& renaming = {});

}  // namespace speiser

#endif  // SPEISER_ISOMORPHISM_HPP_
