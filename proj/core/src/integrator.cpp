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

#include "speiser/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/numeric/odeint/stepper/runge_kutta_fehlberg78.hpp>

#include "speiser/errors.hpp"

namespace speiser {
namespace {

using State = std::vector<Complex>;
using Stepper = boost::numeric::odeint::runge_kutta_fehlberg78<State, double, State, double>;

std::string Where(Complex z) {
  std::ostringstream out;
  out.precision(10);
  out << "z = " << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return out.str();
}

double ColumnNorm(const State& x, std::size_t j) {
  return std::max(std::abs(x[2 * j]), std::abs(x[2 * j + 1]));
}

// w'' = -P w along z(t) = za + t u, |u| = 1, for every (w, w') column.
struct Segment {
  const RealPolynomial* p;
  Complex za;
  Complex u;
  void operator()(const State& x, State& dxdt, double t) const {
    const Complex pz = (*p)(za + t * u);
    dxdt.resize(x.size());
    for (std::size_t i = 0; i < x.size(); i += 2) {
      dxdt[i] = u * x[i + 1];
      dxdt[i + 1] = -u * pz * x[i];
    }
  }
};

}  // namespace

ODESolution integrate(const RealPolynomial& p, const InitialData& init,
                      const std::vector<Complex>& path, double tol) {
  IntegrationOptions options;
  options.tol = tol;
  return integrate(p, init, path, options);
}

ODESolution integrate(const RealPolynomial& p, const InitialData& init,
                      const std::vector<Complex>& path,
                      const IntegrationOptions& options) {
  return std::move(integrate_many(p, init.z0, {{init.w0, init.w0prime}}, path,
                                  options)
                       .front());
}

std::vector<ODESolution> integrate_many(
    const RealPolynomial& p, Complex z0,
    const std::vector<std::pair<Complex, Complex>>& data,
    const std::vector<Complex>& path, const IntegrationOptions& options) {
  const double tol = options.tol;
  if (!(tol >= 1e-14 && tol <= 1e-6)) {
    throw Error(ErrorCode::kInvalidArgument,
                "tolerance must lie in [1e-14, 1e-6]");
  }
  const std::size_t m = data.size();
  State x;
  for (const auto& [w, dw] : data) {
    if (w == 0.0 && dw == 0.0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "initial data (w, w') must not both vanish");
    }
    x.push_back(w);
    x.push_back(dw);
  }
  std::vector<Complex> nodes;
  if (path.empty() || path.front() != z0) nodes.push_back(z0);
  for (const Complex& z : path) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(ErrorCode::kInvalidArgument, "path nodes must be finite");
    }
    nodes.push_back(z);
  }

  std::vector<std::vector<Checkpoint>> checkpoints(m);
  auto record = [&](Complex z) {
    for (std::size_t j = 0; j < m; ++j) {
      checkpoints[j].push_back({z, x[2 * j], x[2 * j + 1]});
    }
  };
  record(z0);
  Stepper stepper;
  State trial, err;
  constexpr double kOrder = 8.0;
  for (std::size_t s = 1; s < nodes.size(); ++s) {
    const Complex za = nodes[s - 1];
    const double length = std::abs(nodes[s] - za);
    if (length <= 1e-14 * std::max(1.0, std::abs(za))) continue;
    const Segment sys{&p, za, (nodes[s] - za) / length};
    double t = 0.0;
    double h = std::min(options.max_step, 0.01);
    double prev_err = 1.0;
    while (t < length) {
      const Complex z = za + t * sys.u;
      const double cap = std::min(
          options.max_step, 0.5 / std::sqrt(std::max(1.0, std::abs(p(z)))));
      h = std::min({h, cap, length - t});
      if (h < 1e-15 * std::max(1.0, t)) {
        throw Error(ErrorCode::kStepUnderflow,
                    "step size underflow at " + Where(z));
      }
      trial = x;
      err.assign(x.size(), Complex(0));
      stepper.do_step(sys, trial, t, h, err);
      double e = 1e-10;
      for (std::size_t j = 0; j < m; ++j) {
        const double scale =
            tol * std::max({ColumnNorm(x, j), ColumnNorm(trial, j), 1e-300});
        e = std::max(e, ColumnNorm(err, j) / scale);
      }
      if (!std::isfinite(e) || e > 1.0) {
        const double shrink =
            std::isfinite(e) ? 0.9 * std::pow(e, -1.0 / kOrder) : 0.2;
        h *= std::clamp(shrink, 0.2, 0.9);
        continue;
      }
      t = (length - t - h <= 1e-15 * length) ? length : t + h;
      x.swap(trial);
      const Complex here = t == length ? nodes[s] : za + t * sys.u;
      for (std::size_t j = 0; j < m; ++j) {
        if (ColumnNorm(x, j) > options.magnitude_cap) {
          throw Error(ErrorCode::kOverflowGuard,
                      "solution magnitude exceeds cap at " + Where(here));
        }
      }
      record(here);
      // PI controller.
      const double factor = 0.9 * std::pow(e, -0.7 / kOrder) *
                            std::pow(prev_err, 0.4 / kOrder);
      h *= std::clamp(factor, 0.2, 5.0);
      prev_err = e;
    }
  }
  std::vector<ODESolution> out;
  for (std::size_t j = 0; j < m; ++j) {
    out.emplace_back(p, InitialData{z0, data[j].first, data[j].second}, nodes,
                     tol, std::move(checkpoints[j]));
  }
  return out;
}

std::array<std::complex<long double>, 2> taylor_step(
    const RealPolynomial& p, std::complex<long double> z,
    std::array<std::complex<long double>, 2> state,
    std::complex<long double> delta) {
  using C = std::complex<long double>;
  const std::vector<C> a = p.Shifted(z);
  // w(z + s) = sum c_k s^k with (k+2)(k+1) c_{k+2} = -sum_j a_j c_{k-j}.
  constexpr int kTerms = 48;
  std::vector<C> c(kTerms, C(0));
  c[0] = state[0];
  c[1] = state[1];
  for (int k = 0; k + 2 < kTerms; ++k) {
    C acc(0);
    for (int j = 0; j <= k && j < static_cast<int>(a.size()); ++j) {
      acc += a[j] * c[k - j];
    }
    c[k + 2] = -acc / static_cast<long double>((k + 1) * (k + 2));
  }
  C w(0), dw(0);
  for (int k = kTerms - 1; k >= 0; --k) {
    w = w * delta + c[k];
    if (k >= 1) dw = dw * delta + static_cast<long double>(k) * c[k];
  }
  return {w, dw};
}

}  // namespace speiser
