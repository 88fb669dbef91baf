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

#include "speiser/basis.hpp"

#include <algorithm>
#include <cmath>

#include "speiser/errors.hpp"

namespace speiser {

SolutionBasis::SolutionBasis(RealPolynomial p, Complex z0, double tol)
    : p_(std::move(p)), z0_(z0), tol_(tol) {
  if (!std::isfinite(z0.real()) || !std::isfinite(z0.imag())) {
    throw Error(ErrorCode::kInvalidArgument, "z0 must be finite");
  }
}

std::vector<BasisSample> SolutionBasis::Along(
    const std::vector<Complex>& path) const {
  IntegrationOptions options;
  options.tol = tol_;
  const auto sols =
      integrate_many(p_, z0_, {{1.0, 0.0}, {0.0, 1.0}}, path, options);
  std::vector<BasisSample> out;
  const auto& a = sols[0].checkpoints();
  const auto& b = sols[1].checkpoints();
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.push_back({a[i].z, a[i].w, a[i].dw, b[i].w, b[i].dw});
  }
  return out;
}

BasisSample SolutionBasis::At(Complex z) const { return Along({z}).back(); }

SolutionBasis solution_basis(const RealPolynomial& p, Complex z0, double tol) {
  return SolutionBasis(p, z0, tol);
}

double wronskian_drift(const SolutionBasis& basis, double a, double b) {
  if (!(a < b)) {
    throw Error(ErrorCode::kInvalidArgument, "interval must satisfy a < b");
  }
  std::vector<std::vector<Complex>> paths;
  const Complex z0 = basis.z0();
  if (z0.imag() == 0.0 && z0.real() >= a && z0.real() <= b) {
    paths = {{Complex(a)}, {Complex(b)}};
  } else {
    paths = {{Complex(a), Complex(b)}};
  }
  double drift = 0.0;
  for (const auto& path : paths) {
    for (const BasisSample& s : basis.Along(path)) {
      drift = std::max(drift, std::abs(s.wronskian() - 1.0));
    }
  }
  return drift;
}

}  // namespace speiser
