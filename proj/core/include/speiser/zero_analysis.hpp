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

#ifndef SPEISER_ZERO_ANALYSIS_HPP_
#define SPEISER_ZERO_ANALYSIS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "speiser/involution.hpp"
#include "speiser/speiser_graph.hpp"
#include "speiser/speiser_tree.hpp"

namespace speiser {

struct ZeroFace {
  int face = 0;
  bool on_axis = false;  // both boundary vertices lie on the axis
};

// Every 2-gon labeled 0. Throws Error(kNoZeroLabel) when "0" is not a base
// point.
std::vector<ZeroFace> zero_faces(const SpeiserGraph& graph);

enum class RealSingularityKind { kAxialFlankPair, kBisectedFace };

struct RealSingularity {
  std::string label;  // the real base point under the singularity
  RealSingularityKind kind = RealSingularityKind::kBisectedFace;
};

struct AssumptionsReport {
  bool ends_at_least_three = false;
  bool zero_is_base_point = false;
  std::vector<RealSingularity> real_log_singularities;
  bool no_split_zero_labels = false;
  bool two_nonzero_real_singularities = false;

  // All assumptions hold: n >= 3, 0 is a base point, no 0+/0- labels and at
  // most one real singularity away from 0.
  bool passed() const;
};

AssumptionsReport check_assumptions(const SpeiserGraph& graph,
                                    const Involution& s);
// Finds the involution first; throws Error(kNoInvolution) without one.
AssumptionsReport check_assumptions(const SpeiserGraph& graph);

struct CriterionResult {
  bool criterion = false;
  std::optional<int> witness;  // a vertex off the axis and off every 0-face
  // The criterion is also necessary (the assumptions hold).
  bool equivalence = false;
};

// Every vertex is on the axis or on the boundary of an unbounded face
// labeled 0. Throws kNoZeroLabel or kSplitZeroLabel.
CriterionResult all_zeros_real(const SpeiserGraph& graph);
CriterionResult all_zeros_real(const SpeiserGraph& graph, const Involution& s);

struct ZeroSetClass {
  enum class Kind {
    kFiniteCount,
    kUnboundedBothDirections,
    kRayPositive,
    kRayNegative,
    kNotAllReal
  };
  Kind kind = Kind::kFiniteCount;
  int count = 0;               // kFiniteCount only
  std::optional<int> witness;  // kNotAllReal only

  // finite:<k>, unbounded-both, ray-positive, ray-negative, not-all-real
  std::string Token() const;
  bool IsRay() const {
    return kind == Kind::kRayPositive || kind == Kind::kRayNegative;
  }
};

ZeroSetClass classify_zero_set(const SpeiserGraph& graph);

struct ZeroCensus {
  int count = 0;
  // Axis positions of the 0-labeled 2-gons, in half steps along the axis
  // measured from the origin vertex (axis-orientation source, else the
  // smallest on-axis vertex), ascending.
  std::vector<int> positions;
};

// Throws Error(kCriterionFailed) when all_zeros_real is false.
ZeroCensus zero_census(const SpeiserGraph& graph);
ZeroCensus zero_census(const SpeiserTree& tree, int depth);

}  // namespace speiser

#endif  // SPEISER_ZERO_ANALYSIS_HPP_
