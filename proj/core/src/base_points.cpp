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

#include "speiser/base_points.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "speiser/errors.hpp"

namespace speiser {

double ChordalDistance(const ExtendedComplex& a, const ExtendedComplex& b) {
  if (a.infinite && b.infinite) return 0.0;
  if (a.infinite) return 2.0 / std::sqrt(1.0 + std::norm(b.value));
  if (b.infinite) return 2.0 / std::sqrt(1.0 + std::norm(a.value));
  return 2.0 * std::abs(a.value - b.value) /
         (std::sqrt(1.0 + std::norm(a.value)) *
          std::sqrt(1.0 + std::norm(b.value)));
}

namespace {

bool IsSplitPartner(const BasePoint& a, const BasePoint& b) {
  return a.split != SplitSide::kNone && b.split != SplitSide::kNone &&
         a.split != b.split && a.split_base == b.split_base;
}

}  // namespace

BasePointSet BasePointSet::Create(std::vector<BasePoint> labels,
                                  bool symmetric) {
  BasePointSet set;
  std::set<std::string> names;
  int zeros = 0;
  int position = -1;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    BasePoint& label = labels[i];
    if (label.name.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "empty base point name");
    }
    if (!names.insert(label.name).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate base point name '" + label.name + "'");
    }
    if (label.name == "0") ++zeros;
    if (i > 0 && IsSplitPartner(labels[i - 1], label)) {
      label.position = position;
    } else {
      label.position = ++position;
    }
  }
  if (zeros > 1) {
    throw Error(ErrorCode::kInvalidArgument, "more than one label named 0");
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const BasePoint& a = labels[i];
    if (a.split != SplitSide::kNone) {
      const bool paired =
          (i > 0 && IsSplitPartner(labels[i - 1], a)) ||
          (i + 1 < labels.size() && IsSplitPartner(labels[i + 1], a));
      if (!paired) {
        throw Error(ErrorCode::kInvalidArgument,
                    "split label '" + a.name + "' has no adjacent partner");
      }
      continue;
    }
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (labels[j].split == SplitSide::kNone && labels[j].value == a.value) {
        throw Error(ErrorCode::kInvalidArgument,
                    "base points '" + a.name + "' and '" + labels[j].name +
                        "' share a value");
      }
    }
  }
  set.q_ = position + 1;
  if (set.q_ < 2) {
    throw Error(ErrorCode::kInvalidArgument, "need at least two base points");
  }
  set.labels_ = std::move(labels);
  set.symmetric_ = symmetric;
  set.conjugate_.assign(set.labels_.size(), kNoLabel);
  if (symmetric) {
    for (LabelId i = 0; i < set.size(); ++i) {
      const BasePoint& a = set.labels_[i];
      for (LabelId j = 0; j < set.size(); ++j) {
        const BasePoint& b = set.labels_[j];
        const bool match =
            a.split == SplitSide::kNone
                ? (b.split == SplitSide::kNone &&
                   b.value == a.value.Conjugate())
                : IsSplitPartner(a, b);
        if (match) {
          set.conjugate_[i] = j;
          break;
        }
      }
      if (set.conjugate_[i] == kNoLabel) {
        throw Error(ErrorCode::kInvalidArgument,
                    "base point '" + a.name + "' has no conjugate in the set");
      }
    }
  }
  return set;
}

std::optional<LabelId> BasePointSet::Find(std::string_view name) const {
  for (LabelId i = 0; i < size(); ++i) {
    if (labels_[i].name == name) return i;
  }
  return std::nullopt;
}

LabelId BasePointSet::Require(std::string_view name) const {
  if (auto id = Find(name)) return *id;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown base point '" + std::string(name) + "'");
}

std::vector<LabelId> BasePointSet::LabelsAt(int position) const {
  std::vector<LabelId> out;
  for (LabelId i = 0; i < size(); ++i) {
    if (labels_[i].position == position) out.push_back(i);
  }
  return out;
}

LabelId BasePointSet::Conjugate(LabelId id) const {
  if (!symmetric_) {
    throw Error(ErrorCode::kInvalidArgument,
                "conjugation requested on a non-symmetric base point set");
  }
  return conjugate_.at(id);
}

bool BasePointSet::IsRealLabel(LabelId id) const {
  const BasePoint& p = labels_.at(id);
  return p.split == SplitSide::kNone && p.value.IsReal();
}

BasePointSet BasePointSet::Split(std::string_view name) const {
  const LabelId id = Require(name);
  const BasePoint& base = labels_[id];
  if (base.split != SplitSide::kNone || !base.value.IsReal()) {
    throw Error(ErrorCode::kInvalidArgument,
                "only unsplit real labels can be split");
  }
  std::vector<BasePoint> out;
  for (LabelId i = 0; i < size(); ++i) {
    if (i != id) {
      out.push_back(labels_[i]);
      continue;
    }
    BasePoint plus = base;
    plus.name = base.name + "+";
    plus.split = SplitSide::kPlus;
    plus.split_base = base.name;
    BasePoint minus = plus;
    minus.name = base.name + "-";
    minus.split = SplitSide::kMinus;
    out.push_back(std::move(plus));
    out.push_back(std::move(minus));
  }
  return Create(std::move(out), symmetric_);
}

BasePointSet BasePointSet::Merge(std::string_view base_name) const {
  std::vector<BasePoint> out;
  bool merged = false;
  for (const BasePoint& p : labels_) {
    if (p.split != SplitSide::kNone && p.split_base == base_name) {
      if (!merged) {
        BasePoint m = p;
        m.name = std::string(base_name);
        m.split = SplitSide::kNone;
        m.split_base.clear();
        out.push_back(std::move(m));
        merged = true;
      }
      continue;
    }
    out.push_back(p);
  }
  if (!merged) {
    throw Error(ErrorCode::kInvalidArgument,
                "no split labels for '" + std::string(base_name) + "'");
  }
  return Create(std::move(out), symmetric_);
}

BasePointSet BasePointSet::WithExtraLabels(std::vector<BasePoint> extra) const {
  std::vector<BasePoint> out = labels_;
  for (BasePoint& p : extra) out.push_back(std::move(p));
  return Create(std::move(out), symmetric_);
}

bool operator==(const BasePointSet& a, const BasePointSet& b) {
  if (a.symmetric_ != b.symmetric_ || a.size() != b.size()) return false;
  for (LabelId i = 0; i < a.size(); ++i) {
    const BasePoint& x = a.labels_[i];
    const BasePoint& y = b.labels_[i];
    if (x.name != y.name || !(x.value == y.value) || x.split != y.split ||
        x.position != y.position) {
      return false;
    }
  }
  return true;
}

}  // namespace speiser
