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

#include "speiser/sectors.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <sstream>

#include "speiser/errors.hpp"

namespace speiser {
namespace {

struct Pair {
  Complex w1, dw1, w2, dw2;
};

ExtendedComplex Ratio(const Pair& s) {
  if (s.w2 == Complex(0.0)) return ExtendedComplex::Infinity();
  return {s.w1 / s.w2, false};
}

// Integrates the pair along a straight leg, rescaling both columns by the
// same factor between chunks.
void Advance(const RealPolynomial& p, const IntegrationOptions& options,
             Complex& z, Pair& s, Complex target) {
  while (z != target) {
    const double rate = 1.0 + std::sqrt(std::abs(p(z)));
    const double chunk = std::min(1.0, 100.0 / rate);
    const double left = std::abs(target - z);
    const Complex next =
        left <= 1.5 * chunk ? target : z + (target - z) * (chunk / left);
    const auto sols =
        integrate_many(p, z, {{s.w1, s.dw1}, {s.w2, s.dw2}}, {next}, options);
    s = {sols[0].end().w, sols[0].end().dw, sols[1].end().w, sols[1].end().dw};
    const double scale = std::max({std::abs(s.w1), std::abs(s.dw1),
                                   std::abs(s.w2), std::abs(s.dw2)});
    s.w1 /= scale;
    s.dw1 /= scale;
    s.w2 /= scale;
    s.dw2 /= scale;
    z = next;
  }
}

// Matrix of the map sending z1, z2, z3 to 0, infinity, 1.
Mobius ToStandard(const std::array<ExtendedComplex, 3>& z) {
  const Complex z1 = z[0].value, z2 = z[1].value, z3 = z[2].value;
  if (z[0].infinite) return {0.0, z3 - z2, 1.0, -z2};
  if (z[1].infinite) return {1.0, -z1, 0.0, z3 - z1};
  if (z[2].infinite) return {1.0, -z1, 1.0, -z2};
  return {z3 - z2, -z1 * (z3 - z2), z3 - z1, -z2 * (z3 - z1)};
}

void RequireDistinct(const std::array<ExtendedComplex, 3>& z) {
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (ChordalDistance(z[i], z[j]) < 1e-12) {
        throw Error(ErrorCode::kInvalidArgument,
                    "normalization points must be distinct");
      }
    }
  }
}

std::string Show(const ExtendedComplex& v) {
  if (v.infinite) return "inf";
  std::ostringstream out;
  out.precision(10);
  out << v.value.real() << (v.value.imag() < 0 ? "" : "+") << v.value.imag()
      << "i";
  return out.str();
}

}  // namespace

std::vector<double> stokes_directions(int degree, Complex leading) {
  if (degree < 0 || leading == Complex(0.0)) {
    throw Error(ErrorCode::kZeroPolynomial, "P must be non-zero");
  }
  const double pi = std::numbers::pi;
  std::vector<double> out;
  for (int j = 0; j < degree + 2; ++j) {
    out.push_back((2.0 * pi * j + pi - std::arg(leading)) / (degree + 2));
  }
  return out;
}

std::vector<double> stokes_directions(const RealPolynomial& p) {
  if (p.is_zero()) {
    throw Error(ErrorCode::kZeroPolynomial, "P must be non-zero");
  }
  return stokes_directions(p.degree(), p.leading());
}

RayOutcome asymptotic_value(const SolutionBasis& basis, double angle,
                            const std::vector<double>& radii, double tol) {
  if (radii.size() < 2) {
    throw Error(ErrorCode::kNoConvergence,
                "a Cauchy test needs at least two radii");
  }
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0) || (i > 0 && !(radii[i] > radii[i - 1]))) {
      throw Error(ErrorCode::kInvalidArgument,
                  "radius schedule must be positive and increasing");
    }
  }
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tol must be positive");
  }
  IntegrationOptions options;
  options.tol = basis.tolerance();
  const Complex dir = std::polar(1.0, angle);
  RayOutcome out;
  out.angle = angle;
  Complex z = basis.z0();
  Pair s{1.0, 0.0, 0.0, 1.0};
  for (double r : radii) {
    Advance(basis.polynomial(), options, z, s, r * dir);
    out.samples.push_back(Ratio(s));
  }
  out.value = out.samples.back();
  out.gap = ChordalDistance(out.samples[out.samples.size() - 2], out.value);
  out.converged = out.gap < tol;
  return out;
}

int SectorReport::converged_count() const {
  return static_cast<int>(std::count_if(
      rays.begin(), rays.end(), [](const RayOutcome& r) { return r.converged; }));
}

SectorReport sector_report(const RealPolynomial& p, const SolutionBasis& basis,
                           const SectorOptions& options) {
  if (!(basis.polynomial() == p)) {
    throw Error(ErrorCode::kInvalidArgument,
                "basis was built for a different polynomial");
  }
  SectorReport report;
  report.angles = stokes_directions(p);
  if (options.radii.size() < 2) {
    throw Error(ErrorCode::kNoConvergence,
                "a Cauchy test needs at least two radii");
  }
  std::vector<std::future<RayOutcome>> jobs;
  for (double angle : report.angles) {
    jobs.push_back(std::async(std::launch::async, [&basis, &options, angle] {
      try {
        return asymptotic_value(basis, angle, options.radii, options.tol);
      } catch (const Error& e) {
        RayOutcome failed;
        failed.angle = angle;
        failed.error = e.what();
        return failed;
      }
    }));
  }
  for (auto& job : jobs) report.rays.push_back(job.get());

  std::vector<int> rep;
  for (int i = 0; i < static_cast<int>(report.rays.size()); ++i) {
    const RayOutcome& ray = report.rays[i];
    int group = -1;
    if (ray.converged) {
      for (std::size_t g = 0; g < rep.size(); ++g) {
        const RayOutcome& other = report.rays[rep[g]];
        if (other.converged &&
            ChordalDistance(other.value, ray.value) <= options.group_tol) {
          group = static_cast<int>(g);
          break;
        }
      }
    }
    if (group == -1) {
      rep.push_back(i);
      report.groups.push_back({i});
    } else {
      report.groups[group].push_back(i);
    }
  }
  return report;
}

Mobius Mobius::FromThreePoints(const std::array<ExtendedComplex, 3>& from,
                               const std::array<ExtendedComplex, 3>& to) {
  RequireDistinct(from);
  RequireDistinct(to);
  return ToStandard(to).Inverse().Compose(ToStandard(from));
}

Mobius Mobius::Compose(const Mobius& g) const {
  return {a * g.a + b * g.c, a * g.b + b * g.d, c * g.a + d * g.c,
          c * g.b + d * g.d};
}

ExtendedComplex Mobius::operator()(const ExtendedComplex& z) const {
  Complex num, den;
  if (z.infinite) {
    num = a;
    den = c;
  } else {
    num = a * z.value + b;
    den = c * z.value + d;
  }
  if (den == Complex(0.0)) return ExtendedComplex::Infinity();
  return {num / den, false};
}

CrossCheckFindings cross_check(const SectorReport& report,
                               const SpeiserGraph& graph,
                               const Mobius& normalization, double tol) {
  CrossCheckFindings out;
  out.ray_count = static_cast<int>(report.rays.size());
  out.unbounded_faces = graph.unbounded_face_count();
  if (out.ray_count != out.unbounded_faces) {
    throw Error(ErrorCode::kCountMismatch,
                std::to_string(out.ray_count) + " rays but " +
                    std::to_string(out.unbounded_faces) + " unbounded faces");
  }
  for (int i = 0; i < out.ray_count; ++i) {
    const RayOutcome& ray = report.rays[i];
    if (!ray.converged) continue;
    const ExtendedComplex v = normalization(ray.value);
    bool found = false;
    for (const BasePoint& b : graph.base().labels()) {
      if (ChordalDistance(b.value, v) <= tol) {
        found = true;
        break;
      }
    }
    if (!found) {
      out.unmatched_rays.push_back(i);
      out.messages.push_back("ray " + std::to_string(i) + ": value " + Show(v) +
                             " lies over no base point");
    }
  }
  return out;
}

}  // namespace speiser
