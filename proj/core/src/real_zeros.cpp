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

#include "speiser/real_zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "speiser/errors.hpp"

namespace speiser {
namespace {

constexpr double kSafety = 10.0;
constexpr double kResolution = 1e4;

struct Sample {
  double x;
  double w;
  double dw;
  double noise;  // propagated absolute error bound on w
};

// Integrates the solution and the fundamental matrix from z0 to `end` and
// returns the grid samples in integration order.
std::vector<Sample> Sweep(const RealPolynomial& p, const InitialData& init,
                          double end, double tol) {
  IntegrationOptions options;
  options.tol = tol;
  const auto sols = integrate_many(
      p, init.z0, {{init.w0, init.w0prime}, {1.0, 0.0}, {0.0, 1.0}},
      {Complex(end)}, options);
  const double data = std::max(std::abs(init.w0), std::abs(init.w0prime));
  const double eps = kSafety * (tol + std::numeric_limits<double>::epsilon());
  std::vector<Sample> out;
  const auto& w = sols[0].checkpoints();
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto& e1 = sols[1].checkpoints()[i];
    const auto& e2 = sols[2].checkpoints()[i];
    const double phi = std::max({std::abs(e1.w), std::abs(e1.dw),
                                 std::abs(e2.w), std::abs(e2.dw)});
    out.push_back({w[i].z.real(), w[i].w.real(), w[i].dw.real(),
                   eps * phi * data});
  }
  return out;
}

// Newton on the local Taylor expansion from the left sample, safeguarded by
// the bracket [lo, hi].
double Refine(const RealPolynomial& p, const Sample& left, double lo,
              double hi, double* slope) {
  using LD = long double;
  const std::array<std::complex<LD>, 2> base{std::complex<LD>(left.w),
                                              std::complex<LD>(left.dw)};
  auto eval = [&](double x) {
    return taylor_step(p, std::complex<LD>(left.x), base,
                       std::complex<LD>(x - left.x));
  };
  const double sign_lo = std::copysign(1.0, left.w);
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 100; ++it) {
    const auto s = eval(x);
    const double w = static_cast<double>(s[0].real());
    const double dw = static_cast<double>(s[1].real());
    *slope = dw;
    if (w == 0.0) break;
    if (std::copysign(1.0, w) == sign_lo) lo = x; else hi = x;
    double next = x - w / dw;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 1e-15 * std::max(1.0, std::abs(x)) ||
        hi - lo <= 1e-15 * std::max(1.0, std::abs(x))) {
      x = next;
      break;
    }
    x = next;
  }
  *slope = static_cast<double>(eval(x)[1].real());
  return x;
}

std::string Fmt(double x) {
  std::ostringstream out;
  out.precision(12);
  out << x;
  return out.str();
}

}  // namespace

RealZeroSet real_zeros(const RealPolynomial& p, const InitialData& init,
                       double a, double b, double tol) {
  if (init.z0.imag() != 0.0 || init.w0.imag() != 0.0 ||
      init.w0prime.imag() != 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "real zeros need real initial data on the real axis");
  }
  if (!(a < b)) {
    throw Error(ErrorCode::kInvalidArgument, "interval must satisfy a < b");
  }
  const double x0 = init.z0.real();
  std::vector<Sample> samples;
  if (a < x0) {
    samples = Sweep(p, init, a, tol);
    std::reverse(samples.begin(), samples.end());
    samples.pop_back();
  }
  if (b > x0) {
    const auto right = Sweep(p, init, b, tol);
    samples.insert(samples.end(), right.begin(), right.end());
  } else if (samples.empty() || samples.back().x != x0) {
    samples.push_back({x0, init.w0.real(), init.w0prime.real(), 0.0});
  }

  RealZeroSet out;
  auto accept = [&](double x, double slope, double noise) {
    if (x < a || x > b) return;
    const double spread = noise / std::max(std::abs(slope), 1e-300);
    if (spread > kResolution * tol) {
      out.warnings.push_back({ZeroWarning::Kind::kUnresolved, x,
                              "sign change near " + Fmt(x) +
                                  " is below the propagated error level"});
      return;
    }
    if (!out.zeros.empty() && x - out.zeros.back() <= 1e-15 * std::abs(x)) {
      return;
    }
    out.zeros.push_back(x);
    out.uncertainty.push_back(spread);
  };
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Sample& s = samples[i];
    if (s.w == 0.0) {
      accept(s.x, s.dw, s.noise);
      continue;
    }
    if (i + 1 == samples.size()) break;
    const Sample& t = samples[i + 1];
    if (t.w == 0.0 || std::signbit(s.w) == std::signbit(t.w)) continue;
    double slope = 0.0;
    const double x = Refine(p, s, s.x, t.x, &slope);
    accept(x, slope, std::max(s.noise, t.noise));
  }
  for (std::size_t i = 1; i < out.zeros.size(); ++i) {
    if (out.zeros[i] - out.zeros[i - 1] < 100.0 * tol) {
      out.warnings.push_back({ZeroWarning::Kind::kCluster, out.zeros[i],
                              "zeros at " + Fmt(out.zeros[i - 1]) + " and " +
                                  Fmt(out.zeros[i]) + " are clustered"});
    }
  }
  return out;
}

}  // namespace speiser
