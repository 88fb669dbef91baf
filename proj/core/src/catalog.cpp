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

#include "speiser/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "speiser/axioms.hpp"
#include "speiser/errors.hpp"
#include "speiser/extension.hpp"
#include "speiser/involution.hpp"
#include "speiser/zero_analysis.hpp"

namespace speiser {
namespace {

enum class Terminal { kAxial, kBisectedZero, kBisectedReal };

struct Layout {
  Terminal west = Terminal::kAxial;
  Terminal east = Terminal::kAxial;
  int spikes = 0;
  bool uses_real = false;  // a real non-zero base point c is needed
};

// Candidate layouts in order of preference.
std::vector<Layout> LayoutsFor(int d, const CatalogVariant& v) {
  using T = Terminal;
  std::vector<Layout> out;
  if (v.kind == CatalogVariant::Kind::kInfinite) {
    if (d % 4 == 0) {
      out.push_back({T::kAxial, T::kAxial, d / 4});
    } else if (d % 4 == 1) {
      out.push_back({T::kAxial, T::kBisectedZero, (d - 1) / 4});
    } else {
      out.push_back({T::kAxial, T::kBisectedReal, (d - 3) / 4});
    }
  } else if (d % 4 == 0) {
    out.push_back({T::kBisectedZero, T::kBisectedReal, (d - 4) / 4});
  } else {
    if (d >= 6) out.push_back({T::kBisectedReal, T::kBisectedReal, (d - 6) / 4});
    out.push_back({T::kBisectedZero, T::kBisectedZero, (d - 2) / 4});
  }
  for (Layout& l : out) {
    l.uses_real = l.west == T::kBisectedReal || l.east == T::kBisectedReal;
  }
  return out;
}

// One point of the search space.
struct Config {
  Parity west_parity = Parity::kCross;
  // Plain axis vertices per stretch; -1 puts the stretch's east node on the
  // same vertex as its west node.
  std::vector<int> padding;
  std::vector<int> slot;     // cyclic position (1..h) of upper label j
  std::vector<bool> flip;    // upper label j sits at q - slot[j] instead
};

std::string UpperName(int j) { return j == 0 ? "a" : "b" + std::to_string(j); }

BasePointSet MakeBase(const Layout& layout, const Config& c) {
  const int h = layout.spikes + 1;
  const int q = 1 + 2 * h + (layout.uses_real ? 1 : 0);
  std::vector<BasePoint> by_position(q);
  by_position[0] = BasePoint{"0", {{0.0, 0.0}, false}, SplitSide::kNone, "", 0};
  if (layout.uses_real) {
    by_position[q / 2] = BasePoint{
        "c", {{static_cast<double>(h + 1), 0.0}, false}, SplitSide::kNone, "", 0};
  }
  for (int j = 0; j < h; ++j) {
    const int up = c.flip[j] ? q - c.slot[j] : c.slot[j];
    const int down = q - up;
    by_position[up].name = UpperName(j);
    by_position[down].name = UpperName(j) + "~";
  }
  for (int p = 1; p <= h; ++p) {
    by_position[p].value = {{static_cast<double>(p), 1.0}, false};
    by_position[q - p].value = {{static_cast<double>(p), -1.0}, false};
  }
  return BasePointSet::Create(std::move(by_position), true);
}

class Builder {
 public:
  explicit Builder(BasePointSet base) {
    parts_.base = std::move(base);
    parts_.involution = TreeInvolution{};
  }

  int Vertex(Parity parity, bool on_axis) {
    parts_.vertices.push_back(TreeVertex{parity, on_axis});
    parts_.rotation.emplace_back();
    parts_.involution->vertex_map.push_back(
        static_cast<int>(parts_.vertices.size()) - 1);
    return static_cast<int>(parts_.vertices.size()) - 1;
  }
  int Edge(int u, int v) {
    parts_.edges.push_back(TreeEdge{u, v});
    return static_cast<int>(parts_.edges.size()) - 1;
  }
  int End(int v, LabelId left, LabelId right, bool axial) {
    parts_.ends.push_back(TreeEnd{v, left, right, axial});
    parts_.involution->end_map.push_back(
        static_cast<int>(parts_.ends.size()) - 1);
    return static_cast<int>(parts_.ends.size()) - 1;
  }
  void Mirror(int v, int w) {
    parts_.involution->vertex_map[v] = w;
    parts_.involution->vertex_map[w] = v;
  }
  void MirrorEnds(int a, int b) {
    parts_.involution->end_map[a] = b;
    parts_.involution->end_map[b] = a;
  }
  std::vector<RotationItem>& Rotation(int v) { return parts_.rotation[v]; }
  const BasePointSet& base() const { return parts_.base; }
  LabelId Label(const std::string& name) const {
    return parts_.base.Require(name);
  }
  LabelId Conj(LabelId l) const { return parts_.base.Conjugate(l); }
  const TreeVertex& vertex(int v) const { return parts_.vertices[v]; }
  SpeiserTree::Parts Take() { return std::move(parts_); }

  // Stem from axis vertex v to an off-axis vertex carrying two ends with the
  // 0-face between them, mirrored below. Returns (upper, lower) stem edges.
  std::pair<int, int> Spike(int v, LabelId left_face, LabelId right_face) {
    const LabelId zero = Label("0");
    const Parity p = Opposite(vertex(v).parity);
    const int w = Vertex(p, false);
    const int w2 = Vertex(p, false);
    Mirror(w, w2);
    const int up = Edge(v, w);
    const int down = Edge(v, w2);
    const int r = End(w, zero, right_face, false);
    const int l = End(w, left_face, zero, false);
    Rotation(w) = {RotationItem::Edge(up), RotationItem::End(r),
                   RotationItem::End(l)};
    const int l2 = End(w2, zero, Conj(left_face), false);
    const int r2 = End(w2, Conj(right_face), zero, false);
    Rotation(w2) = {RotationItem::Edge(down), RotationItem::End(l2),
                    RotationItem::End(r2)};
    MirrorEnds(r, r2);
    MirrorEnds(l, l2);
    return {up, down};
  }

 private:
  SpeiserTree::Parts parts_;
};

SpeiserTree Assemble(const Layout& layout, const Config& c) {
  Builder b(MakeBase(layout, c));
  const int s = layout.spikes;
  const LabelId zero = b.Label("0");
  std::vector<LabelId> upper;
  for (int j = 0; j <= s; ++j) upper.push_back(b.Label(UpperName(j)));

  // Axis vertices west to east, with the stretch index of the edge leaving
  // each one eastward.
  std::vector<int> axis;
  std::vector<int> spike_at;  // spike index + 1 at axis vertices, 0 otherwise
  Parity parity = c.west_parity;
  auto push = [&](int spike) {
    axis.push_back(b.Vertex(parity, true));
    spike_at.push_back(spike);
    parity = Opposite(parity);
  };
  push(0);
  for (int j = 0; j <= s; ++j) {
    if (c.padding[j] < 0) {
      if (j < s) {
        if (spike_at.back() != 0) {
          throw Error(ErrorCode::kInvalidArgument, "two spikes on one vertex");
        }
        spike_at.back() = j + 1;
      }
      continue;
    }
    for (int i = 0; i < c.padding[j]; ++i) push(0);
    push(j < s ? j + 1 : 0);
  }
  const int n = static_cast<int>(axis.size());
  std::vector<int> east_edge(n, -1);
  for (int i = 0; i + 1 < n; ++i) east_edge[i] = b.Edge(axis[i], axis[i + 1]);

  // Items a terminal adds at its axis vertex.
  struct Side {
    std::optional<RotationItem> outward;  // axial end
    std::vector<RotationItem> north, south;
  };
  auto terminal = [&](int v, bool is_west) {
    Side side;
    const Terminal t = is_west ? layout.west : layout.east;
    const LabelId u = is_west ? upper.front() : upper.back();
    const LabelId ubar = b.Conj(u);
    if (t == Terminal::kAxial) {
      const int e = is_west ? b.End(v, ubar, u, true) : b.End(v, u, ubar, true);
      side.outward = RotationItem::End(e);
    } else if (t == Terminal::kBisectedZero) {
      const int up = is_west ? b.End(v, zero, u, false)
                             : b.End(v, u, zero, false);
      const int down = is_west ? b.End(v, ubar, zero, false)
                               : b.End(v, zero, ubar, false);
      b.MirrorEnds(up, down);
      side.north.push_back(RotationItem::End(up));
      side.south.push_back(RotationItem::End(down));
    } else {
      const LabelId real = b.Label("c");
      auto [up, down] = is_west ? b.Spike(v, real, u) : b.Spike(v, u, real);
      side.north.push_back(RotationItem::Edge(up));
      side.south.push_back(RotationItem::Edge(down));
    }
    return side;
  };

  for (int i = 0; i < n; ++i) {
    const int v = axis[i];
    Side east_side, west_side, middle;
    if (i + 1 < n) east_side.outward = RotationItem::Edge(east_edge[i]);
    if (i > 0) west_side.outward = RotationItem::Edge(east_edge[i - 1]);
    if (spike_at[i] > 0) {
      const int k = spike_at[i];
      auto [up, down] = b.Spike(v, upper[k - 1], upper[k]);
      middle.north.push_back(RotationItem::Edge(up));
      middle.south.push_back(RotationItem::Edge(down));
    }
    if (i == 0) west_side = terminal(v, true);
    if (i == n - 1) east_side = terminal(v, false);
    // Anticlockwise: east, north (east to west), west, south (west to east).
    auto& rot = b.Rotation(v);
    auto append = [&rot](const std::vector<RotationItem>& items) {
      rot.insert(rot.end(), items.begin(), items.end());
    };
    if (east_side.outward) rot.push_back(*east_side.outward);
    append(east_side.north);
    append(middle.north);
    append(west_side.north);
    if (west_side.outward) rot.push_back(*west_side.outward);
    append(west_side.south);
    append(middle.south);
    append(east_side.south);
  }
  SpeiserTree::Parts parts = b.Take();
  if (axis.size() > 1) {
    parts.axis_orientation = AxisOrientation{axis.front(), axis.back()};
  }
  return SpeiserTree::Create(std::move(parts));
}

bool Matches(const ZeroSetClass& cls, int d, const CatalogVariant& v) {
  if (v.kind == CatalogVariant::Kind::kFiniteZeros) {
    return cls.kind == ZeroSetClass::Kind::kFiniteCount && cls.count == v.zeros;
  }
  if (d % 2 == 1) return cls.IsRay();
  return cls.kind == ZeroSetClass::Kind::kUnboundedBothDirections;
}

bool Accept(const SpeiserTree& tree, int d, const CatalogVariant& v) {
  try {
    const SpeiserGraph g = extend_tree(tree, 2);
    if (!validate_axioms(g).passed()) return false;
    const auto s = find_involution(g);
    if (!s || !all_zeros_real(g, *s).criterion) return false;
    return Matches(classify_zero_set(g), d, v);
  } catch (const Error&) {
    return false;
  }
}

// Padding vectors with the given total, lexicographic.
void Paddings(int stretches, int total, std::vector<int>& cur,
              std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == stretches - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int x = 0; x <= total; ++x) {
    cur.push_back(x);
    Paddings(stretches, total - x, cur, out);
    cur.pop_back();
  }
}

std::optional<SpeiserTree> TryOrders(const Layout& layout, Config c, int d,
                                     const CatalogVariant& v) {
  const int h = layout.spikes + 1;
  std::vector<int> slot(h);
  std::iota(slot.begin(), slot.end(), 1);
  do {
    for (int mask = 0; mask < (1 << h); ++mask) {
      c.slot = slot;
      c.flip.clear();
      for (int j = 0; j < h; ++j) c.flip.push_back((mask >> j) & 1);
      std::optional<SpeiserTree> tree;
      try {
        tree = Assemble(layout, c);
      } catch (const Error&) {
        continue;
      }
      if (Accept(*tree, d, v)) return tree;
    }
  } while (std::next_permutation(slot.begin(), slot.end()));
  return std::nullopt;
}

std::optional<SpeiserTree::Parts> Search(int d, const CatalogVariant& v) {
  const int max_padding = 2 * (v.zeros + 4);
  for (const Layout& layout : LayoutsFor(d, v)) {
    const int h = layout.spikes + 1;
    std::vector<std::vector<int>> paddings;
    for (int total = 0; total <= max_padding; ++total) {
      std::vector<int> cur;
      Paddings(h, total, cur, paddings);
    }
    if (v.kind == CatalogVariant::Kind::kFiniteZeros) {
      // Shared vertices: same enumeration shifted by one per stretch, kept
      // only when some stretch is actually merged.
      const std::size_t plain = paddings.size();
      for (std::size_t i = 0; i < plain; ++i) {
        std::vector<int> shifted = paddings[i];
        for (int& x : shifted) --x;
        if (*std::min_element(shifted.begin(), shifted.end()) < 0) {
          paddings.push_back(shifted);
        }
      }
    }
    {
      for (const auto& padding : paddings) {
        for (Parity west : {Parity::kCross, Parity::kCircle}) {
          Config c;
          c.west_parity = west;
          c.padding = padding;
          if (auto tree = TryOrders(layout, c, d, v)) return tree->parts();
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::string CatalogVariant::Token() const {
  return kind == Kind::kInfinite ? "infinite"
                                 : "finite:" + std::to_string(zeros);
}

SpeiserTree catalog_tree(int d, CatalogVariant variant) {
  if (d < 1) {
    throw Error(ErrorCode::kInvalidArgument, "catalog degree must be positive");
  }
  if (variant.kind == CatalogVariant::Kind::kInfinite && d % 4 == 2) {
    throw Error(ErrorCode::kVariantUnavailable,
                "degree " + std::to_string(d) +
                    " = 2 (mod 4) admits no infinite set of real zeros");
  }
  if (variant.kind == CatalogVariant::Kind::kFiniteZeros) {
    if (d % 2 == 1) {
      throw Error(ErrorCode::kVariantUnavailable,
                  "finite variants need an even degree");
    }
    if (variant.zeros < 0) {
      throw Error(ErrorCode::kInvalidArgument, "zero count must be >= 0");
    }
  }

  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::optional<SpeiserTree::Parts>> cache;
  const std::pair<int, int> key{
      d, variant.kind == CatalogVariant::Kind::kInfinite ? -1 : variant.zeros};
  std::optional<SpeiserTree::Parts> parts;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, Search(d, variant)).first;
    parts = it->second;
  }
  if (!parts) {
    throw Error(ErrorCode::kVariantUnavailable,
                "no caterpillar realizes degree " + std::to_string(d) + " " +
                    variant.Token());
  }
  return SpeiserTree::Create(std::move(*parts));
}

}  // namespace speiser
