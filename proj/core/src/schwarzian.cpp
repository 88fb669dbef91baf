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

#include "speiser/schwarzian.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "speiser/errors.hpp"

namespace speiser {
namespace {

using LC = std::complex<long double>;

std::string Where(Complex z) {
  std::ostringstream out;
  out << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return out.str();
}

}  // namespace

SchwarzianReport schwarzian_residual(const SolutionBasis& basis,
                                     const std::vector<Complex>& samples,
                                     double h) {
  if (!(h > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "step h must be positive");
  }
  const RealPolynomial& p = basis.polynomial();
  SchwarzianReport report;
  for (const Complex& z : samples) {
    const BasisSample s = basis.At(z);
    if (std::abs(s.w2) <= 10.0 * h * std::abs(s.dw2)) {
      throw Error(ErrorCode::kPoleTooClose,
                  "a pole of f lies within 10 h of " + Where(z));
    }
    const double size =
        std::abs(s.w1 * s.dw2) + std::abs(s.dw1 * s.w2);
    if (std::abs(s.wronskian()) <= 1e-8 * size) {
      throw Error(ErrorCode::kCriticalPoint,
                  "f' is lost to cancellation at " + Where(z));
    }
    const LC zl(z);
    const std::array<LC, 2> c1{LC(s.w1), LC(s.dw1)};
    const std::array<LC, 2> c2{LC(s.w2), LC(s.dw2)};
    std::array<LC, 5> f;
    for (int m = -2; m <= 2; ++m) {
      const LC delta(static_cast<long double>(m) * h, 0.0L);
      const auto a = taylor_step(p, zl, c1, delta);
      const auto b = taylor_step(p, zl, c2, delta);
      f[m + 2] = a[0] / b[0];
    }
    const long double hl = h;
    const LC d1 = (f[3] - f[1]) / (2.0L * hl);
    const LC d2 = (f[3] - 2.0L * f[2] + f[1]) / (hl * hl);
    const LC d3 = (f[4] - 2.0L * f[3] + 2.0L * f[1] - f[0]) / (2.0L * hl * hl * hl);
    const LC r = d2 / d1;
    const LC schwarzian = d3 / d1 - 1.5L * r * r;
    const Complex sf(static_cast<double>(schwarzian.real()),
                     static_cast<double>(schwarzian.imag()));
    const double residual = std::abs(sf - 2.0 * p(z));
    report.points.push_back({z, sf, residual});
    report.max_residual = std::max(report.max_residual, residual);
  }
  return report;
}

}  // namespace speiser
