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

#ifndef SPEISER_TESTS_AIRY_ORACLE_HPP_
#define SPEISER_TESTS_AIRY_ORACLE_HPP_

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <complex>
#include <vector>

namespace speiser::testing {

using Big = boost::multiprecision::cpp_bin_float_50;
using BigComplex = boost::multiprecision::cpp_complex_50;

struct OracleValue {
  std::complex<double> w;
  std::complex<double> dw;
};

// Power series at 0 of the solution of w'' = z w with w(0) = c0 and
// w'(0) = c1, summed in 50-digit arithmetic.
inline OracleValue AirySeries(const Big& c0, const Big& c1,
                              std::complex<double> z) {
  const BigComplex x(Big(z.real()), Big(z.imag()));
  std::vector<Big> c{c0, c1, Big(0)};
  BigComplex w(0), dw(0), pow(1), prev(0);
  int quiet = 0;
  for (int k = 0; k < 4000 && quiet < 3; ++k) {
    if (k >= 3) {
      c.push_back(c[k - 3] / Big(k * (k - 1)));
    }
    const BigComplex term = c[k] * pow;
    w += term;
    if (k >= 1) dw += Big(k) * c[k] * prev;
    prev = pow;
    pow *= x;
    const Big size = abs(term);
    quiet = (k > 8 && size < Big("1e-45") * (1 + abs(w))) ? quiet + 1 : 0;
  }
  return {{static_cast<double>(w.real()), static_cast<double>(w.imag())},
          {static_cast<double>(dw.real()), static_cast<double>(dw.imag())}};
}

inline Big AiAtZero() {
  using boost::multiprecision::pow;
  return 1 / (pow(Big(3), Big(2) / 3) * boost::math::tgamma(Big(2) / 3));
}

inline Big AiPrimeAtZero() {
  using boost::multiprecision::pow;
  return -1 / (pow(Big(3), Big(1) / 3) * boost::math::tgamma(Big(1) / 3));
}

inline OracleValue Ai(std::complex<double> z) {
  return AirySeries(AiAtZero(), AiPrimeAtZero(), z);
}

// Zeros of Ai in [a, b] by a scan with step 0.05 and bisection.
inline std::vector<double> AiZeros(double a, double b) {
  std::vector<double> zeros;
  auto f = [](double x) { return Ai({x, 0.0}).w.real(); };
  double lo = a;
  double flo = f(lo);
  for (double hi = a + 0.05; hi <= b + 1e-12; hi += 0.05) {
    const double fhi = f(hi);
    if ((flo < 0) != (fhi < 0)) {
      double l = lo, h = hi;
      for (int i = 0; i < 80; ++i) {
        const double m = 0.5 * (l + h);
        ((f(m) < 0) == (flo < 0) ? l : h) = m;
      }
      zeros.push_back(0.5 * (l + h));
    }
    lo = hi;
    flo = fhi;
  }
  return zeros;
}

}  // namespace speiser::testing

#endif  // SPEISER_TESTS_AIRY_ORACLE_HPP_
