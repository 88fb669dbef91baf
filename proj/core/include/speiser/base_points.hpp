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

#ifndef SPEISER_BASE_POINTS_HPP_
#define SPEISER_BASE_POINTS_HPP_

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace speiser {

// A point of the Riemann sphere: a finite complex number or infinity.
struct ExtendedComplex {
  std::complex<double> value{0.0, 0.0};
  bool infinite = false;

  static ExtendedComplex Infinity() { return {{0.0, 0.0}, true}; }

  bool IsReal() const { return infinite || value.imag() == 0.0; }
  ExtendedComplex Conjugate() const {
    return infinite ? Infinity() : ExtendedComplex{std::conj(value), false};
  }
  friend bool operator==(const ExtendedComplex& a, const ExtendedComplex& b) {
    if (a.infinite || b.infinite) return a.infinite == b.infinite;
    return a.value == b.value;
  }
};

// Chordal distance on the Riemann sphere.
double ChordalDistance(const ExtendedComplex& a, const ExtendedComplex& b);

enum class SplitSide { kNone, kPlus, kMinus };

using LabelId = int;
inline constexpr LabelId kNoLabel = -1;

struct BasePoint {
  std::string name;
  ExtendedComplex value;
  // Split labels a+ / a- record the real point they were pushed off.
  SplitSide split = SplitSide::kNone;
  std::string split_base;
  // Index into the cyclic order. The two halves of a split point share it.
  int position = 0;
};

// Base points of a Speiser graph in the cyclic order fixed by the base curve.
//
// The curve itself is never stored; only the order matters. Labels are
// addressed by LabelId (index into labels()). q() counts positions, so a
// split pair a+/a- contributes one position and two labels.
class BasePointSet {
 public:
  BasePointSet() = default;

  // Builds a set from labels listed in cyclic order. Split labels must be
  // adjacent and are assigned a shared position. Throws Error on duplicate
  // names or values, fewer than two positions, more than one label named
  // "0", or (when symmetric) a set not closed under conjugation.
  static BasePointSet Create(std::vector<BasePoint> labels, bool symmetric);

  const std::vector<BasePoint>& labels() const { return labels_; }
  int size() const { return static_cast<int>(labels_.size()); }
  int q() const { return q_; }
  bool symmetric() const { return symmetric_; }

  const BasePoint& label(LabelId id) const { return labels_.at(id); }
  int position(LabelId id) const { return labels_.at(id).position; }
  std::optional<LabelId> Find(std::string_view name) const;
  LabelId Require(std::string_view name) const;

  // All labels occupying a cyclic position (two for a split pair).
  std::vector<LabelId> LabelsAt(int position) const;

  // Conjugate label. For split labels a+ <-> a-. Throws if the set is not
  // symmetric or the conjugate is missing.
  LabelId Conjugate(LabelId id) const;
  bool IsRealLabel(LabelId id) const;
  std::optional<LabelId> Zero() const { return Find("0"); }

  // Splits the real label `name` into name+ / name- at the same position.
  BasePointSet Split(std::string_view name) const;
  // Inverse of Split.
  BasePointSet Merge(std::string_view base_name) const;
  // Appends labels as new cyclic positions at the end of the order.
  BasePointSet WithExtraLabels(std::vector<BasePoint> extra) const;

  friend bool operator==(const BasePointSet& a, const BasePointSet& b);

 private:
  std::vector<BasePoint> labels_;
  std::vector<LabelId> conjugate_;
  int q_ = 0;
  bool symmetric_ = false;
};

}  // namespace speiser

#endif  // SPEISER_BASE_POINTS_HPP_
