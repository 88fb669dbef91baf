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

#include "speiser/polynomial.hpp"

#include <charconv>
#include <cmath>

#include "speiser/errors.hpp"

namespace speiser {

RealPolynomial::RealPolynomial(std::vector<double> coefficients)
    : c_(std::move(coefficients)) {
  for (double x : c_) {
    if (!std::isfinite(x)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "polynomial coefficients must be finite");
    }
  }
  while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

RealPolynomial RealPolynomial::derivative() const {
  std::vector<double> d;
  for (std::size_t k = 1; k < c_.size(); ++k) {
    d.push_back(static_cast<double>(k) * c_[k]);
  }
  return RealPolynomial(std::move(d));
}

std::vector<std::complex<long double>> RealPolynomial::Shifted(
    std::complex<long double> z0) const {
  // Repeated synthetic division (Taylor shift).
  std::vector<std::complex<long double>> a(c_.begin(), c_.end());
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) {
    for (int k = n - 2; k >= i; --k) a[k] += z0 * a[k + 1];
  }
  return a;
}

std::string RealPolynomial::ToString() const {
  if (c_.empty()) return "0";
  std::string out;
  char buf[32];
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (k) out += ',';
    auto r = std::to_chars(buf, buf + sizeof buf, c_[k]);
    out.append(buf, r.ptr);
  }
  return out;
}

RealPolynomial hermite(int n) {
  if (n < 0) {
    throw Error(ErrorCode::kInvalidArgument, "Hermite index must be >= 0");
  }
  std::vector<double> prev{1.0};
  if (n == 0) return RealPolynomial(prev);
  std::vector<double> cur{0.0, 2.0};
  for (int k = 1; k < n; ++k) {
    std::vector<double> next(cur.size() + 1, 0.0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2.0 * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= 2.0 * k * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return RealPolynomial(std::move(cur));
}

}  // namespace speiser
