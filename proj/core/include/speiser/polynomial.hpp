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

#ifndef SPEISER_POLYNOMIAL_HPP_
#define SPEISER_POLYNOMIAL_HPP_

#include <complex>
#include <string>
#include <vector>

namespace speiser {

// Real polynomial with coefficients in ascending degree order. Trailing
// zeros are dropped, so the leading coefficient is non-zero unless the
// polynomial is zero.
class RealPolynomial {
 public:
  RealPolynomial() = default;
  // Throws Error(kInvalidArgument) on non-finite coefficients.
  explicit RealPolynomial(std::vector<double> coefficients);

  const std::vector<double>& coefficients() const { return c_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  double leading() const { return c_.empty() ? 0.0 : c_.back(); }

  template <typename T>
  T operator()(const T& z) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = acc * z + T(static_cast<typename Scalar<T>::type>(*it));
    }
    return acc;
  }

  RealPolynomial derivative() const;
  // Coefficients of P(z0 + t) in t, ascending.
  std::vector<std::complex<long double>> Shifted(
      std::complex<long double> z0) const;

  std::string ToString() const;  // "c0,c1,..."
  friend bool operator==(const RealPolynomial&, const RealPolynomial&) =
      default;

 private:
  template <typename T>
  struct Scalar {
    using type = T;
  };
  template <typename T>
  struct Scalar<std::complex<T>> {
    using type = T;
  };

  std::vector<double> c_;
};

// Physicists' Hermite polynomial: H0 = 1, H1 = 2z,
// H(n+1) = 2z H(n) - 2n H(n-1).
RealPolynomial hermite(int n);

}  // namespace speiser

#endif  // SPEISER_POLYNOMIAL_HPP_
