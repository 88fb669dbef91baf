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

#ifndef SPEISER_REAL_ZEROS_HPP_
#define SPEISER_REAL_ZEROS_HPP_

#include <string>
#include <vector>

#include "speiser/integrator.hpp"

namespace speiser {

struct ZeroWarning {
  enum class Kind {
    kCluster,           // two zeros closer than 100 tol
    kUnresolved,        // sign change below the propagated error level
  };
  Kind kind = Kind::kCluster;
  double x = 0.0;
  std::string message;
};

struct RealZeroSet {
  std::vector<double> zeros;        // ascending
  std::vector<double> uncertainty;  // propagated error / |w'| per zero
  std::vector<ZeroWarning> warnings;
};

// Zeros in [a, b] of the real solution with real initial data. Sign changes
// on the integration grid are refined by safeguarded Newton steps on a local
// Taylor expansion. A sign change only counts when the error propagated
// through the fundamental matrix, divided by |w'|, stays below 1e4 tol;
// others are reported as kUnresolved warnings.
RealZeroSet real_zeros(const RealPolynomial& p, const InitialData& init,
                       double a, double b, double tol = 1e-12);

}  // namespace speiser

#endif  // SPEISER_REAL_ZEROS_HPP_
