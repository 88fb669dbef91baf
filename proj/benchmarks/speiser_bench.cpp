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

#include <benchmark/benchmark.h>

#include "speiser/axioms.hpp"
#include "speiser/basis.hpp"
#include "speiser/catalog.hpp"
#include "speiser/extension.hpp"
#include "speiser/involution.hpp"
#include "speiser/isomorphism.hpp"
#include "speiser/real_zeros.hpp"
#include "speiser/sectors.hpp"
#include "speiser/skeleton.hpp"

namespace speiser {
namespace {

void BM_ExtendTree(benchmark::State& state) {
  const SpeiserTree t = catalog_tree(8, CatalogVariant::Infinite());
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(extend_tree(t, depth));
}
BENCHMARK(BM_ExtendTree)->Arg(2)->Arg(4)->Arg(8);

void BM_ValidateAxioms(benchmark::State& state) {
  const SpeiserGraph g =
      extend_tree(catalog_tree(8, CatalogVariant::Infinite()), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(validate_axioms(g));
}
BENCHMARK(BM_ValidateAxioms)->Arg(2)->Arg(4)->Arg(8);

void BM_FindInvolution(benchmark::State& state) {
  const SpeiserGraph g = extend_tree(catalog_tree(8, CatalogVariant::Infinite()), 4);
  for (auto _ : state) benchmark::DoNotOptimize(find_involution(g));
}
BENCHMARK(BM_FindInvolution);

void BM_Isomorphism(benchmark::State& state) {
  const SpeiserGraph g = extend_tree(catalog_tree(9, CatalogVariant::Infinite()), 4);
  const SpeiserGraph h = extend_tree(skeleton_tree(g), 0);
  for (auto _ : state) benchmark::DoNotOptimize(is_isomorphic(g, h));
}
BENCHMARK(BM_Isomorphism);

void BM_SineZeros(benchmark::State& state) {
  const RealPolynomial p({1.0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(real_zeros(p, {0.0, 0.0, 1.0}, -10.0, 10.0));
  }
}
BENCHMARK(BM_SineZeros);

void BM_AiryZeros(benchmark::State& state) {
  const RealPolynomial p({0.0, -1.0});
  const InitialData ai{0.0, 0.355028053887817, -0.258819403792807};
  for (auto _ : state) benchmark::DoNotOptimize(real_zeros(p, ai, -12.0, 5.0));
}
BENCHMARK(BM_AiryZeros);

void BM_SectorReport(benchmark::State& state) {
  const RealPolynomial p({5.0, 0.0, -1.0});
  const SolutionBasis basis = solution_basis(p, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(sector_report(p, basis));
}
BENCHMARK(BM_SectorReport)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace speiser

BENCHMARK_MAIN();
