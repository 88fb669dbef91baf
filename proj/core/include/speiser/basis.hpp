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

#ifndef SPEISER_BASIS_HPP_
#define SPEISER_BASIS_HPP_

#include <vector>

#include "speiser/integrator.hpp"

namespace speiser {

struct BasisSample {
  Complex z;
  Complex w1, dw1;
  Complex w2, dw2;

  Complex wronskian() const { return w1 * dw2 - dw1 * w2; }
  Complex ratio() const { return w1 / w2; }
};

// The pair w1, w2 with (w1, w1') = (1, 0) and (w2, w2') = (0, 1) at z0, so
// W(z0) = 1. Solutions are integrated on demand along caller paths.
class SolutionBasis {
 public:
  SolutionBasis(RealPolynomial p, Complex z0, double tol);

  const RealPolynomial& polynomial() const { return p_; }
  Complex z0() const { return z0_; }
  double tolerance() const { return tol_; }

  // Both solutions on one shared grid from z0 along `path`.
  std::vector<BasisSample> Along(const std::vector<Complex>& path) const;
  // Values at z via the straight segment from z0.
  BasisSample At(Complex z) const;

 private:
  RealPolynomial p_;
  Complex z0_;
  double tol_;
};

SolutionBasis solution_basis(const RealPolynomial& p, Complex z0,
                             double tol = 1e-12);

// max |W - 1| over the integration grid covering the real interval [a, b].
double wronskian_drift(const SolutionBasis& basis, double a, double b);

}  // namespace speiser

#endif  // SPEISER_BASIS_HPP_
