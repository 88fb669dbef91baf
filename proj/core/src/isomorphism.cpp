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

#include "speiser/isomorphism.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace speiser {
namespace {

std::vector<std::int64_t> Keys(const BasePointSet& base,
                               const LabelRenaming& renaming,
                               std::map<std::string, std::int64_t>& table) {
  std::vector<std::int64_t> keys(base.size());
  for (LabelId id = 0; id < base.size(); ++id) {
    std::string name = base.label(id).name;
    if (auto it = renaming.find(name); it != renaming.end()) name = it->second;
    auto [pos, inserted] =
        table.emplace(name, static_cast<std::int64_t>(table.size()));
    keys[id] = pos->second;
  }
  return keys;
}

bool SameShape(const LabeledMap& a, const LabeledMap& b) {
  if (a.vertex_count() != b.vertex_count() ||
      a.dart_count() != b.dart_count()) {
    return false;
  }
  std::vector<int> da, db;
  for (int v = 0; v < a.vertex_count(); ++v) da.push_back(a.degree(v));
  for (int v = 0; v < b.vertex_count(); ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  return da == db;
}

bool MapsIsomorphic(const LabeledMap& a, const BasePointSet& base_a,
                    const LabeledMap& b, const BasePointSet& base_b,
                    const LabelRenaming& renaming) {
  if (!SameShape(a, b)) return false;
  if (a.dart_count() == 0) return a.vertex_count() == b.vertex_count();
  std::map<std::string, std::int64_t> table;
  const auto keys_a = Keys(base_a, {}, table);
  const auto keys_b = Keys(base_b, renaming, table);

  const int root = 0;
  const int va = a.dart(root).vertex;
  const auto target = CanonicalCode(a, root, false, keys_a);
  const std::int64_t root_corner =
      a.label(root) == kNoLabel ? -1 : keys_a[a.label(root)];
  for (bool mirror : {false, true}) {
    for (int d = 0; d < b.dart_count(); ++d) {
      const int vb = b.dart(d).vertex;
      if (b.degree(vb) != a.degree(va) ||
          b.vertex(vb).parity != a.vertex(va).parity ||
          b.vertex(vb).on_axis != a.vertex(va).on_axis ||
          b.is_stub(d) != a.is_stub(root)) {
        continue;
      }
      const LabelId corner = mirror ? b.label(b.succ(d)) : b.label(d);
      if ((corner == kNoLabel ? -1 : keys_b[corner]) != root_corner) continue;
      if (CanonicalCode(b, d, mirror, keys_b) == target) return true;
    }
  }
  return false;
}

}  // namespace

bool is_isomorphic(const SpeiserGraph& g1, const SpeiserGraph& g2,
                   const LabelRenaming& renaming) {
  if (g1.faces().size() != g2.faces().size() ||
      g1.ends().size() != g2.ends().size()) {
    return false;
  }
  return MapsIsomorphic(g1.map(), g1.base(), g2.map(), g2.base(), renaming);
}

bool is_isomorphic(const SpeiserTree& t1, const SpeiserTree& t2,
                   const LabelRenaming& renaming) {
  if (t1.end_count() != t2.end_count()) return false;
  return MapsIsomorphic(t1.map(), t1.base(), t2.map(), t2.base(), renaming);
}

}  // namespace speiser
