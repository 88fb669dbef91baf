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

#ifndef SPEISER_SCHWARZIAN_HPP_
#define SPEISER_SCHWARZIAN_HPP_

#include <vector>

#include "speiser/basis.hpp"

namespace speiser {

struct SchwarzianPoint {
  Complex z;
  Complex schwarzian;
  double residual = 0.0;  // |S_f(z) - 2 P(z)|
};

struct SchwarzianReport {
  std::vector<SchwarzianPoint> points;
  double max_residual = 0.0;
};

// S_f = f'''/f' - 3/2 (f''/f')^2 for f = w1/w2 from central differences of
// step h on the real direction through each sample point. Stencil values
// are propagated from the basis values at the sample by a local Taylor
// expansion, so integration error cancels and the residual measures the
// O(h^2) truncation. Throws kPoleTooClose when a zero of w2 lies within
// 10 h of a sample and kCriticalPoint when W is lost to cancellation.
SchwarzianReport schwarzian_residual(const SolutionBasis& basis,
                                     const std::vector<Complex>& samples,
                                     double h = 1e-3);

}  // namespace speiser

#endif  // SPEISER_SCHWARZIAN_HPP_
