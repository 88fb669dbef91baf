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

#include "speiser/extension.hpp"

#include <string>

#include "speiser/errors.hpp"

namespace speiser {
namespace {

int Mod(int a, int q) { return ((a % q) + q) % q; }

int Gap(const BasePointSet& base, Parity parity, LabelId before,
        LabelId after) {
  const int i = base.position(before);
  const int j = base.position(after);
  return parity == Parity::kCross ? Mod(j - i, base.q()) : Mod(i - j, base.q());
}

LabelId LabelAtPosition(const BasePointSet& base, int position) {
  const auto ids = base.LabelsAt(position);
  if (ids.size() != 1) {
    throw Error(ErrorCode::kAmbiguousLabel,
                "2-gon label at cyclic position " + std::to_string(position) +
                    " is not unique");
  }
  return ids.front();
}

}  // namespace

std::vector<int> item_gaps(const SpeiserTree& tree, int v) {
  const LabeledMap& m = tree.map();
  const BasePointSet& base = tree.base();
  const Parity parity = m.vertex(v).parity;
  std::vector<int> gaps;
  int total = 0;
  for (int t : m.rotation(v)) {
    const int g = Gap(base, parity, m.label(t), m.left_label(t));
    if (g == 0) {
      throw Error(ErrorCode::kZeroGap,
                  "adjacent faces at v" + std::to_string(v) +
                      " share the label position of " +
                      base.label(m.label(t)).name);
    }
    gaps.push_back(g);
    total += g;
  }
  if (total != base.q()) {
    throw Error(ErrorCode::kWindingMismatch,
                "labels around v" + std::to_string(v) + " wind " +
                    std::to_string(total) + "/" + std::to_string(base.q()) +
                    " times around the base points");
  }
  return gaps;
}

SpeiserGraph extend_tree(const SpeiserTree& tree, int depth) {
  std::vector<std::vector<int>> paths;
  const SpeiserTree full = expand_ends(tree, depth, &paths);
  const LabeledMap& tm = full.map();
  const BasePointSet& base = full.base();
  const int q = base.q();

  GraphInput in;
  in.depth = depth;
  in.axis_orientation = tree.axis_orientation();
  in.vertices = tm.vertices();
  in.rotation.resize(tm.vertex_count());
  std::vector<std::vector<int>> bundle(tm.dart_count());

  for (int v = 0; v < tm.vertex_count(); ++v) {
    const std::vector<int> gaps = item_gaps(full, v);
    const Parity parity = tm.vertex(v).parity;
    const int step = parity == Parity::kCross ? 1 : -1;
    int slot = 0;
    for (int t : tm.rotation(v)) {
      const LabelId before = tm.label(t);
      const int count = tm.is_stub(t) ? 1 : gaps[slot];
      for (int i = 0; i < count; ++i) {
        Dart d;
        d.vertex = v;
        d.label = i == 0 ? before
                         : LabelAtPosition(
                               base, Mod(base.position(before) + step * i, q));
        if (tm.is_stub(t)) d.end = tm.dart(t).end;
        bundle[t].push_back(static_cast<int>(in.darts.size()));
        in.rotation[v].push_back(static_cast<int>(in.darts.size()));
        in.darts.push_back(d);
      }
      ++slot;
    }
  }
  for (int t = 0; t < tm.dart_count(); ++t) {
    if (tm.is_stub(t)) continue;
    const auto& mine = bundle[t];
    const auto& theirs = bundle[tm.twin(t)];
    const int g = static_cast<int>(mine.size());
    for (int i = 0; i < g; ++i) in.darts[mine[i]].twin = theirs[g - 1 - i];
  }

  for (int k = 0; k < full.end_count(); ++k) {
    const TreeEnd& end = full.ends()[k];
    EndDescriptor e;
    e.attach_vertex = tree.ends()[k].vertex;
    e.path = paths[k];
    e.stub = bundle[full.EndDart(k)].front();
    e.left = end.left;
    e.right = end.right;
    e.axial = end.axial;
    e.cross_bundle = Gap(base, Parity::kCross, end.right, end.left);
    e.circle_bundle = Gap(base, Parity::kCircle, end.right, end.left);
    in.ends.push_back(e);
  }
  return SpeiserGraph::Build(base, std::move(in));
}

}  // namespace speiser
