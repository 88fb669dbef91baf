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

#include "speiser/mutation.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "speiser/axioms.hpp"
#include "speiser/errors.hpp"
#include "speiser/involution.hpp"

namespace speiser {
namespace {

int Pick(std::mt19937_64& rng, int n) {
  return std::uniform_int_distribution<int>(0, n - 1)(rng);
}

void SwapFaceLabels(const SpeiserGraph& g, GraphInput& in,
                    std::mt19937_64& rng, Mutation* m) {
  const auto& faces = g.faces();
  const int nf = static_cast<int>(faces.size());
  int f1 = Pick(rng, nf);
  int f2 = Pick(rng, nf);
  while (faces[f2].label == faces[f1].label) f2 = Pick(rng, nf);
  for (int d : faces[f1].darts) in.darts[d].label = faces[f2].label;
  for (int d : faces[f2].darts) in.darts[d].label = faces[f1].label;
  m->kind = MutationKind::kSwapFaceLabels;
  m->description = "swap labels of faces " + std::to_string(f1) + " and " +
                   std::to_string(f2);
}

void DeleteBundleEdge(const SpeiserGraph& g, GraphInput& in,
                      std::mt19937_64& rng, Mutation* m) {
  const LabeledMap& map = g.map();
  std::vector<int> candidates;
  for (int e = 0; e < static_cast<int>(g.edges().size()); ++e) {
    const int d = g.edges()[e].dart;
    const int t = map.twin(d);
    if (map.twin(map.succ(d)) == map.pred(t) ||
        map.twin(map.pred(d)) == map.succ(t)) {
      candidates.push_back(e);
    }
  }
  const int e = candidates[Pick(rng, static_cast<int>(candidates.size()))];
  const int a = g.edges()[e].dart;
  const int b = g.edges()[e].twin;
  std::vector<int> remap(in.darts.size(), -1);
  std::vector<Dart> kept;
  for (int d = 0; d < static_cast<int>(in.darts.size()); ++d) {
    if (d == a || d == b) continue;
    remap[d] = static_cast<int>(kept.size());
    kept.push_back(in.darts[d]);
  }
  for (Dart& d : kept) {
    if (d.twin != kStub) d.twin = remap[d.twin];
  }
  for (auto& rot : in.rotation) {
    std::vector<int> next;
    for (int d : rot) {
      if (remap[d] != -1) next.push_back(remap[d]);
    }
    rot = std::move(next);
  }
  in.darts = std::move(kept);
  m->kind = MutationKind::kDeleteBundleEdge;
  m->description = "delete bundle edge " + std::to_string(e);
}

void ReverseRotation(const SpeiserGraph& g, GraphInput& in,
                     std::mt19937_64& rng, Mutation* m) {
  std::vector<int> candidates;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.map().degree(v) >= 3) candidates.push_back(v);
  }
  const int v = candidates[Pick(rng, static_cast<int>(candidates.size()))];
  std::reverse(in.rotation[v].begin(), in.rotation[v].end());
  m->kind = MutationKind::kReverseRotation;
  m->description = "reverse rotation at v" + std::to_string(v);
}

}  // namespace

GraphInput mutate(const SpeiserGraph& graph, std::mt19937_64& rng,
                  Mutation* applied) {
  GraphInput in = graph.ToInput();
  for (EndDescriptor& end : in.ends) {
    end.left = kNoLabel;
    end.right = kNoLabel;
  }
  Mutation m;
  switch (Pick(rng, 3)) {
    case 0: SwapFaceLabels(graph, in, rng, &m); break;
    case 1: DeleteBundleEdge(graph, in, rng, &m); break;
    default: ReverseRotation(graph, in, rng, &m); break;
  }
  if (applied != nullptr) *applied = m;
  return in;
}

MutationOutcome mutate_and_check(const SpeiserGraph& graph,
                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  MutationOutcome out;
  GraphInput in = mutate(graph, rng, &out.mutation);
  try {
    const SpeiserGraph mutated = SpeiserGraph::Build(graph.base(), std::move(in));
    const AxiomReport axioms = validate_axioms(mutated);
    if (!axioms.passed()) {
      out.rejected = true;
      out.reason = "axioms";
      return out;
    }
    if (!find_involution(mutated)) {
      out.rejected = true;
      out.reason = "symmetry";
      return out;
    }
  } catch (const Error& e) {
    out.rejected = true;
    out.reason = ErrorCodeName(e.code());
  }
  return out;
}

}  // namespace speiser
