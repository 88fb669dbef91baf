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

#ifndef SPEISER_INTEGRATOR_HPP_
#define SPEISER_INTEGRATOR_HPP_

#include <array>
#include <complex>
#include <utility>
#include <vector>

#include "speiser/polynomial.hpp"

namespace speiser {

using Complex = std::complex<double>;

struct InitialData {
  Complex z0;
  Complex w0;
  Complex w0prime;
};

struct Checkpoint {
  Complex z;
  Complex w;
  Complex dw;
};

struct IntegrationOptions {
  double tol = 1e-12;
  double magnitude_cap = 1e150;  // OverflowGuard threshold on |w|, |w'|
  double max_step = 0.25;
};

// Solution of w'' + P w = 0 along a polyline. Checkpoints hold every
// accepted step, starting with the initial data.
class ODESolution {
 public:
  ODESolution(RealPolynomial p, InitialData init, std::vector<Complex> path,
              double tol, std::vector<Checkpoint> checkpoints)
      : p_(std::move(p)),
        init_(init),
        path_(std::move(path)),
        tol_(tol),
        checkpoints_(std::move(checkpoints)) {}

  const RealPolynomial& polynomial() const { return p_; }
  const InitialData& initial() const { return init_; }
  const std::vector<Complex>& path() const { return path_; }
  double tolerance() const { return tol_; }
  const std::vector<Checkpoint>& checkpoints() const { return checkpoints_; }
  const Checkpoint& end() const { return checkpoints_.back(); }

 private:
  RealPolynomial p_;
  InitialData init_;
  std::vector<Complex> path_;
  double tol_;
  std::vector<Checkpoint> checkpoints_;
};

// Adaptive Runge-Kutta-Fehlberg 7(8) with a PI step controller, segment by
// segment along `path` (z0 is prepended when path does not start there).
// Throws kInvalidArgument for tol outside [1e-14, 1e-6] or zero initial
// data, kStepUnderflow when the step size collapses and kOverflowGuard when
// |w| or |w'| exceeds the magnitude cap. Both report the location.
ODESolution integrate(const RealPolynomial& p, const InitialData& init,
                      const std::vector<Complex>& path,
                      const IntegrationOptions& options = {});
ODESolution integrate(const RealPolynomial& p, const InitialData& init,
                      const std::vector<Complex>& path, double tol);

// Integrates several solutions on one shared step grid; the step is
// accepted only when every column meets the tolerance. Checkpoint i has the
// same z in every returned solution.
std::vector<ODESolution> integrate_many(
    const RealPolynomial& p, Complex z0,
    const std::vector<std::pair<Complex, Complex>>& data,
    const std::vector<Complex>& path, const IntegrationOptions& options = {});

// Short local propagation of (w, w') from z to z + delta by a Taylor
// expansion in long double; intended for |delta| small against the
// solution's scale of variation.
std::array<std::complex<long double>, 2> taylor_step(
    const RealPolynomial& p, std::complex<long double> z,
    std::array<std::complex<long double>, 2> state,
    std::complex<long double> delta);

}  // namespace speiser

#endif  // SPEISER_INTEGRATOR_HPP_
