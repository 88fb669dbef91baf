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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "airy_oracle.hpp"
#include "speiser/basis.hpp"
#include "speiser/errors.hpp"
#include "speiser/integrator.hpp"
#include "speiser/polynomial.hpp"
#include "speiser/real_zeros.hpp"
#include "speiser/schwarzian.hpp"

namespace speiser {
namespace {

constexpr double kPi = std::numbers::pi;

const RealPolynomial kSine({1.0});
const RealPolynomial kAiry({0.0, -1.0});
const RealPolynomial kHermite2({5.0, 0.0, -1.0});

InitialData AiData() {
  return {0.0, static_cast<double>(testing::AiAtZero()),
          static_cast<double>(testing::AiPrimeAtZero())};
}

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(AiryOracle, KnownValues) {
  EXPECT_NEAR(testing::Ai({1.0, 0.0}).w.real(), 0.1352924163128814, 1e-15);
  EXPECT_NEAR(testing::Ai({-10.0, 0.0}).w.real(), 0.0402412384864432, 1e-14);
  EXPECT_NEAR(static_cast<double>(testing::AiAtZero()), 0.355028053887817,
              1e-15);
  const auto zeros = testing::AiZeros(-6.0, 0.0);
  ASSERT_EQ(zeros.size(), 3u);
  EXPECT_NEAR(zeros[2], -2.338107410459767, 1e-12);
}

TEST(Hermite, Coefficients) {
  EXPECT_EQ(hermite(0).coefficients(), (std::vector<double>{1.0}));
  EXPECT_EQ(hermite(2).coefficients(), (std::vector<double>{-2.0, 0.0, 4.0}));
  EXPECT_EQ(hermite(3).coefficients(),
            (std::vector<double>{0.0, -12.0, 0.0, 8.0}));
  EXPECT_EQ(CodeOf([] { hermite(-1); }), ErrorCode::kInvalidArgument);
}

TEST(Integrate, Sine) {
  const ODESolution s = integrate(kSine, {0.0, 0.0, 1.0}, {kPi / 2});
  EXPECT_NEAR(std::abs(s.end().w - 1.0), 0.0, 1e-11);
  EXPECT_NEAR(std::abs(s.end().dw), 0.0, 1e-11);
  EXPECT_EQ(s.checkpoints().front().z, Complex(0.0));
}

TEST(Integrate, HermiteFunction) {
  // e^{-z^2/2} H_0 solves w'' + (1 - z^2) w = 0.
  const RealPolynomial p({1.0, 0.0, -1.0});
  const ODESolution s = integrate(p, {0.0, 1.0, 0.0}, {1.0});
  EXPECT_NEAR(s.end().w.real(), std::exp(-0.5), 1e-11);
  const ODESolution h2 = integrate(kHermite2, {0.0, -2.0, 0.0}, {1.0});
  EXPECT_NEAR(h2.end().w.real(), 2.0 * std::exp(-0.5), 1e-11);
}

TEST(Integrate, ComplexPathMatchesOracle) {
  const ODESolution s =
      integrate(kAiry, AiData(), {Complex(1.0, 1.0), Complex(-2.0, 0.5)});
  const testing::OracleValue o = testing::Ai({-2.0, 0.5});
  EXPECT_LT(std::abs(s.end().w - o.w), 1e-10);
  EXPECT_LT(std::abs(s.end().dw - o.dw), 1e-10);
}

TEST(Integrate, Reversible) {
  const InitialData init{0.3, Complex(0.2, -0.1), Complex(1.0, 0.5)};
  const ODESolution there = integrate(kAiry, init, {Complex(-3.0, 1.0)});
  const ODESolution back = integrate(
      kAiry, {there.end().z, there.end().w, there.end().dw}, {init.z0});
  EXPECT_LT(std::abs(back.end().w - init.w0), 1e-10);
  EXPECT_LT(std::abs(back.end().dw - init.w0prime), 1e-10);
}

TEST(Integrate, Linear) {
  const std::vector<Complex> path{Complex(2.0, -1.0)};
  const Complex a(0.7, 0.2);
  const Complex b(-1.1, 0.4);
  const auto u = integrate(kHermite2, {0.0, 1.0, 0.0}, path).end();
  const auto v = integrate(kHermite2, {0.0, 0.0, 1.0}, path).end();
  const auto w = integrate(kHermite2, {0.0, a, b}, path).end();
  EXPECT_LT(std::abs(w.w - (a * u.w + b * v.w)), 1e-9 * std::abs(w.w));
}

TEST(Integrate, Errors) {
  EXPECT_EQ(CodeOf([] { integrate(kSine, {0.0, 0.0, 0.0}, {1.0}); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { integrate(kSine, {0.0, 1.0, 0.0}, {1.0}, 1e-3); }),
            ErrorCode::kInvalidArgument);
  IntegrationOptions tight;
  tight.magnitude_cap = 1e3;
  EXPECT_EQ(CodeOf([&] { integrate(kAiry, {0.0, 1.0, 0.0}, {8.0}, tight); }),
            ErrorCode::kOverflowGuard);
}

TEST(Integrate, ManySharesTheGrid) {
  const auto sols = integrate_many(kAiry, 0.0, {{1.0, 0.0}, {0.0, 1.0}},
                                   {Complex(2.0, 2.0)});
  ASSERT_EQ(sols.size(), 2u);
  ASSERT_EQ(sols[0].checkpoints().size(), sols[1].checkpoints().size());
  for (std::size_t i = 0; i < sols[0].checkpoints().size(); ++i) {
    EXPECT_EQ(sols[0].checkpoints()[i].z, sols[1].checkpoints()[i].z);
  }
}

TEST(TaylorStep, MatchesSine) {
  using L = std::complex<long double>;
  const auto s = taylor_step(kSine, L(1.0L), {L(std::sin(1.0L)), L(std::cos(1.0L))},
                             L(1e-3L));
  EXPECT_NEAR(static_cast<double>(std::abs(s[0] - L(std::sin(1.001L)))), 0.0,
              1e-17);
}

TEST(RealZeros, SineOnSymmetricInterval) {
  const RealZeroSet z = real_zeros(kSine, {0.0, 0.0, 1.0}, -10.0, 10.0);
  ASSERT_EQ(z.zeros.size(), 7u);
  for (std::size_t i = 0; i < z.zeros.size(); ++i) {
    EXPECT_NEAR(z.zeros[i], (static_cast<int>(i) - 3) * kPi, 1e-9);
  }
  EXPECT_EQ(z.uncertainty.size(), z.zeros.size());
}

TEST(RealZeros, AiryMatchesOracle) {
  const RealZeroSet z = real_zeros(kAiry, AiData(), -12.0, 5.0);
  const auto oracle = testing::AiZeros(-12.0, 5.0);
  ASSERT_EQ(z.zeros.size(), oracle.size());
  for (std::size_t i = 0; i < oracle.size(); ++i) {
    EXPECT_NEAR(z.zeros[i], oracle[i], 1e-8);
  }
  for (double x : z.zeros) EXPECT_LT(x, 0.0);
}

TEST(RealZeros, HermiteFiniteSet) {
  const RealZeroSet z = real_zeros(kHermite2, {0.0, -2.0, 0.0}, -10.0, 10.0);
  ASSERT_EQ(z.zeros.size(), 2u);
  EXPECT_NEAR(z.zeros[0], -1.0 / std::sqrt(2.0), 1e-10);
  EXPECT_NEAR(z.zeros[1], 1.0 / std::sqrt(2.0), 1e-10);
}

TEST(RealZeros, SturmInterlacing) {
  for (const RealPolynomial& p : {kSine, kAiry}) {
    const auto a = real_zeros(p, {0.0, 1.0, 0.0}, -10.0, 10.0).zeros;
    const auto b = real_zeros(p, {0.0, 0.0, 1.0}, -10.0, 10.0).zeros;
    ASSERT_GE(a.size() + b.size(), 4u);
    std::vector<std::pair<double, int>> all;
    for (double x : a) all.push_back({x, 0});
    for (double x : b) all.push_back({x, 1});
    std::sort(all.begin(), all.end());
    for (std::size_t i = 1; i < all.size(); ++i) {
      EXPECT_NE(all[i].second, all[i - 1].second) << "near " << all[i].first;
      EXPECT_GT(all[i].first - all[i - 1].first, 1e-6);
    }
  }
}

TEST(RealZeros, InvalidInterval) {
  EXPECT_EQ(CodeOf([] { real_zeros(kSine, {0.0, 0.0, 1.0}, 1.0, -1.0); }),
            ErrorCode::kInvalidArgument);
}

TEST(Basis, MatchesOracle) {
  const SolutionBasis basis = solution_basis(kAiry, 0.0);
  const testing::Big one(1), zero(0);
  for (double x : {-1.0, 1.0}) {
    const BasisSample s = basis.At(x);
    const auto u = testing::AirySeries(one, zero, {x, 0.0});
    const auto v = testing::AirySeries(zero, one, {x, 0.0});
    EXPECT_LT(std::abs(s.w1 - u.w), 1e-10);
    EXPECT_LT(std::abs(s.dw1 - u.dw), 1e-10);
    EXPECT_LT(std::abs(s.w2 - v.w), 1e-10);
    EXPECT_LT(std::abs(s.dw2 - v.dw), 1e-10);
  }
}

TEST(Wronskian, Drift) {
  EXPECT_EQ(wronskian_drift(solution_basis(RealPolynomial({0.0}), 0.0), -10, 10),
            0.0);
  EXPECT_LT(wronskian_drift(solution_basis(kSine, 0.0), -10, 10), 1e-9);
  EXPECT_LT(wronskian_drift(solution_basis(kAiry, 0.0), -10, 2), 1e-9);
  EXPECT_EQ(CodeOf([] { wronskian_drift(solution_basis(kSine, 0.0), 1, 1); }),
            ErrorCode::kInvalidArgument);
}

TEST(Schwarzian, ConstantPolynomials) {
  const auto zero = schwarzian_residual(solution_basis(RealPolynomial({0.0}), 0.0),
                                        {Complex(5.0, 0.0)});
  EXPECT_LT(std::abs(zero.points[0].schwarzian), 1e-6);
  // cot z has S = 2.
  const auto sine = schwarzian_residual(solution_basis(kSine, 0.0),
                                        {Complex(1.5, 0.0), Complex(0.3, 2.0)});
  EXPECT_NEAR(sine.points[0].schwarzian.real(), 2.0, 1e-4);
  EXPECT_LT(sine.max_residual, 1e-4);
}

TEST(Schwarzian, SecondOrderConvergence) {
  const SolutionBasis basis = solution_basis(kAiry, 0.0);
  const Complex z(1.0, 0.5);
  const double r1 = schwarzian_residual(basis, {z}, 1e-3).max_residual;
  const double r2 = schwarzian_residual(basis, {z}, 5e-4).max_residual;
  EXPECT_GE(r1 / r2, 3.5);
  EXPECT_LE(r1 / r2, 4.5);
}

TEST(Schwarzian, PoleTooClose) {
  // w2 = sin z vanishes at pi.
  EXPECT_EQ(CodeOf([] {
              schwarzian_residual(solution_basis(kSine, 0.0), {Complex(kPi, 0.0)});
            }),
            ErrorCode::kPoleTooClose);
}

}  // namespace
}  // namespace speiser
