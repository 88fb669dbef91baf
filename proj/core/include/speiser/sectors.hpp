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

#ifndef SPEISER_SECTORS_HPP_
#define SPEISER_SECTORS_HPP_

#include <array>
#include <string>
#include <vector>

#include "speiser/base_points.hpp"
#include "speiser/basis.hpp"
#include "speiser/speiser_graph.hpp"

namespace speiser {

// Central rays of the d+2 sectors, theta_j = (2 pi j + pi - arg a_d)/(d+2).
// Throws kZeroPolynomial for P = 0.
std::vector<double> stokes_directions(const RealPolynomial& p);
std::vector<double> stokes_directions(int degree, Complex leading);

struct RayOutcome {
  double angle = 0.0;
  bool converged = false;
  ExtendedComplex value;                // last ratio sample
  double gap = 0.0;                     // chordal distance of the last two
  std::vector<ExtendedComplex> samples;  // f at each schedule radius
  std::string error;  // set by sector_report when integration failed
};

// Samples f = w1/w2 at z = R e^{i angle} for each R of the schedule and
// tests the last two samples for a chordal gap below tol. The pair (w1, w2)
// is rescaled projectively every unit of arc length, so only the ratio is
// tracked. Throws kNoConvergence when the schedule has fewer than two radii.
RayOutcome asymptotic_value(const SolutionBasis& basis, double angle,
                            const std::vector<double>& radii, double tol);

struct SectorOptions {
  std::vector<double> radii{6.0, 9.0, 12.0};
  double tol = 1e-6;
  double group_tol = 1e-4;  // chordal distance for equal values
};

struct SectorReport {
  std::vector<double> angles;
  std::vector<RayOutcome> rays;
  // Partition of ray indices; a divergent ray forms its own group.
  std::vector<std::vector<int>> groups;

  int converged_count() const;
};

// Probes all d+2 rays concurrently; results are kept in angle order.
SectorReport sector_report(const RealPolynomial& p, const SolutionBasis& basis,
                           const SectorOptions& options = {});

// Fractional linear map z -> (a z + b)/(c z + d) on the Riemann sphere.
struct Mobius {
  Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

  static Mobius Identity() { return {}; }
  // The map sending from[i] to to[i]. Throws kInvalidArgument when either
  // triple has coincident points.
  static Mobius FromThreePoints(const std::array<ExtendedComplex, 3>& from,
                                const std::array<ExtendedComplex, 3>& to);

  ExtendedComplex operator()(const ExtendedComplex& z) const;
  Mobius Inverse() const { return {d, -b, -c, a}; }
  Mobius Compose(const Mobius& inner) const;
};

struct CrossCheckFindings {
  int ray_count = 0;
  int unbounded_faces = 0;
  // Converged values, after normalization, with no base point of G within
  // tol. Entries are ray indices.
  std::vector<int> unmatched_rays;
  std::vector<std::string> messages;

  bool values_contained() const { return unmatched_rays.empty(); }
};

// Compares a numerical sector report with the unbounded faces of G. Throws
// kCountMismatch when the ray count differs from the number of unbounded
// faces; value mismatches are only reported.
CrossCheckFindings cross_check(const SectorReport& report,
                               const SpeiserGraph& graph,
                               const Mobius& normalization,
                               double tol = 1e-4);

}  // namespace speiser

#endif  // SPEISER_SECTORS_HPP_
