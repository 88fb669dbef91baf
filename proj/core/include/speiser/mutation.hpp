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

#ifndef SPEISER_MUTATION_HPP_
#define SPEISER_MUTATION_HPP_

#include <cstdint>
#include <random>
#include <string>

#include "speiser/speiser_graph.hpp"

namespace speiser {

enum class MutationKind { kSwapFaceLabels, kDeleteBundleEdge, kReverseRotation };

struct Mutation {
  MutationKind kind = MutationKind::kSwapFaceLabels;
  std::string description;
};

// Applies one random mutation and returns the raw input of the mutated
// graph. End flank seeds are dropped so that labels come from the faces.
GraphInput mutate(const SpeiserGraph& graph, std::mt19937_64& rng,
                  Mutation* applied);

struct MutationOutcome {
  Mutation mutation;
  bool rejected = false;
  std::string reason;  // first failing check
};

// Mutates once with the given seed, then rebuilds, validates the axioms and
// looks for an involution. Rejected when any stage fails.
MutationOutcome mutate_and_check(const SpeiserGraph& graph, std::uint64_t seed);

}  // namespace speiser

#endif  // SPEISER_MUTATION_HPP_
