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

#ifndef SPEISER_CATALOG_HPP_
#define SPEISER_CATALOG_HPP_

#include <string>

#include "speiser/speiser_tree.hpp"

namespace speiser {

struct CatalogVariant {
  enum class Kind { kInfinite, kFiniteZeros };
  Kind kind = Kind::kInfinite;
  int zeros = 0;

  static CatalogVariant Infinite() { return {Kind::kInfinite, 0}; }
  static CatalogVariant FiniteZeros(int k) { return {Kind::kFiniteZeros, k}; }
  // "infinite" or "finite:<k>"
  std::string Token() const;
  friend bool operator==(const CatalogVariant&, const CatalogVariant&) =
      default;
};

// Symmetric caterpillar tree with d + 2 ends whose extension is a valid
// Speiser graph with all zeros real:
//   d = 0 mod 4, infinite: axial ends at both axis terminals,
//   d odd, infinite: an axial end at the west terminal,
//   d even, finite:k: no axial end and exactly k zero 2-gons on the axis.
// The axis runs from the west terminal to the east terminal. Conjugate pairs
// of ends hang off the axis so that each is flanked by a face labeled 0.
// Throws kVariantUnavailable for d = 2 mod 4 infinite, odd d finite, or when
// no configuration realizes the request; kInvalidArgument for d < 1.
SpeiserTree catalog_tree(int d, CatalogVariant variant);

}  // namespace speiser

#endif  // SPEISER_CATALOG_HPP_
