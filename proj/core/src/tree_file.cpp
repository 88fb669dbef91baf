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

#include "speiser/tree_file.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "speiser/errors.hpp"

namespace speiser {
namespace {

constexpr std::string_view kHeader = "speiser-tree v1";

std::string_view Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto at = s.find(sep);
    out.push_back(Trim(s.substr(0, at)));
    if (at == std::string_view::npos) return out;
    s.remove_prefix(at + 1);
  }
}

std::string FormatDouble(double x) {
  if (x == 0.0) x = 0.0;  // drops the sign of -0
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

std::optional<double> ParseDouble(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double x = 0.0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), x);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size()) return std::nullopt;
  return x;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SpeiserTree Run();

 private:
  [[noreturn]] void Fail(ErrorCode code, const std::string& what) const {
    throw Error(code, "line " + std::to_string(line_) + ": " + what);
  }
  [[noreturn]] void Syntax(const std::string& what) const {
    Fail(ErrorCode::kSyntaxError, what);
  }
  [[noreturn]] void Invariant(const std::string& what) const {
    Fail(ErrorCode::kInvariantViolation, what);
  }

  int Int(std::string_view s) const {
    int x = 0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), x);
    if (s.empty() || r.ec != std::errc() || r.ptr != s.data() + s.size() ||
        x < 0) {
      Syntax("expected a non-negative integer, got '" + std::string(s) + "'");
    }
    return x;
  }
  int Ref(std::string_view s, std::string_view prefix) const {
    if (s.substr(0, prefix.size()) != prefix) {
      Syntax("expected " + std::string(prefix) + "<id>, got '" +
             std::string(s) + "'");
    }
    return Int(s.substr(prefix.size()));
  }
  std::string_view Wrapped(std::string_view s, std::string_view head) const {
    if (s.substr(0, head.size()) != head || s.size() < head.size() + 2 ||
        s[head.size()] != '(' || s.back() != ')') {
      Syntax("expected " + std::string(head) + "(...), got '" +
             std::string(s) + "'");
    }
    return s.substr(head.size() + 1, s.size() - head.size() - 2);
  }
  bool Flag(std::string_view s) const {
    if (s == "0") return false;
    if (s == "1") return true;
    Syntax("expected 0 or 1, got '" + std::string(s) + "'");
  }
  template <typename T>
  void Store(std::map<int, std::pair<T, int>>& into, int id, T value,
             const char* what) {
    if (!into.emplace(id, std::pair{std::move(value), line_}).second) {
      Syntax(std::string("duplicate ") + what + " id " + std::to_string(id));
    }
  }

  void BasePoints(std::string_view rest);
  void Line(std::string_view key, std::string_view rest);

  std::string_view text_;
  int line_ = 0;

  std::optional<BasePointSet> base_;
  std::optional<AxisOrientation> axis_;
  int axis_line_ = 0;
  std::map<int, std::pair<TreeVertex, int>> vertices_;
  std::map<int, std::pair<TreeEdge, int>> edges_;
  std::map<int, std::pair<std::vector<RotationItem>, int>> rotations_;
  struct RawEnd {
    int vertex;
    std::string left, right;
    bool axial;
  };
  std::map<int, std::pair<RawEnd, int>> ends_;
  std::vector<std::pair<std::pair<int, int>, int>> vertex_pairs_;
  std::vector<std::pair<std::pair<int, int>, int>> end_pairs_;
};

void Parser::BasePoints(std::string_view rest) {
  if (base_) Syntax("duplicate basepoints line");
  std::vector<BasePoint> labels;
  for (std::string_view item : Split(rest, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      Syntax("base point '" + std::string(item) + "' needs name=value");
    }
    BasePoint b;
    b.name = std::string(Trim(item.substr(0, eq)));
    try {
      b.value = parse_complex(Trim(item.substr(eq + 1)));
    } catch (const Error& e) {
      Syntax(e.what());
    }
    labels.push_back(std::move(b));
  }
  auto stem = [](const std::string& n) { return n.substr(0, n.size() - 1); };
  auto side = [](const std::string& n) {
    if (n.size() < 2) return SplitSide::kNone;
    return n.back() == '+'   ? SplitSide::kPlus
           : n.back() == '-' ? SplitSide::kMinus
                             : SplitSide::kNone;
  };
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const SplitSide s = side(labels[i].name);
    if (s == SplitSide::kNone) continue;
    for (std::size_t j : {i - 1, i + 1}) {
      if (j >= labels.size()) continue;
      const SplitSide t = side(labels[j].name);
      if (t != SplitSide::kNone && t != s &&
          stem(labels[j].name) == stem(labels[i].name)) {
        labels[i].split = s;
        labels[i].split_base = stem(labels[i].name);
      }
    }
  }
  try {
    try {
      base_ = BasePointSet::Create(labels, true);
    } catch (const Error&) {
      base_ = BasePointSet::Create(labels, false);
    }
  } catch (const Error& e) {
    Invariant(e.what());
  }
}

void Parser::Line(std::string_view key, std::string_view rest) {
  if (key == "basepoints") {
    BasePoints(rest);
  } else if (key == "axis-orientation") {
    if (axis_) Syntax("duplicate axis-orientation line");
    const auto arrow = rest.find("->");
    if (arrow == std::string_view::npos) Syntax("expected v<id> -> v<id>");
    axis_ = AxisOrientation{Ref(Trim(rest.substr(0, arrow)), "v"),
                            Ref(Trim(rest.substr(arrow + 2)), "v")};
    axis_line_ = line_;
  } else if (key == "vertex") {
    const auto f = Split(rest, ' ');
    if (f.size() != 3) Syntax("expected: vertex: id parity axis");
    if (f[1] != "x" && f[1] != "o") Syntax("parity must be x or o");
    Store(vertices_, Int(f[0]),
          TreeVertex{f[1] == "x" ? Parity::kCross : Parity::kCircle,
                     Flag(f[2])},
          "vertex");
  } else if (key == "edge") {
    const auto f = Split(rest, ' ');
    if (f.size() != 3) Syntax("expected: edge: id v<id> v<id>");
    Store(edges_, Int(f[0]), TreeEdge{Ref(f[1], "v"), Ref(f[2], "v")},
          "edge");
  } else if (key == "rotation") {
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) Syntax("expected v<id>: items");
    const int v = Ref(Trim(rest.substr(0, colon)), "v");
    std::vector<RotationItem> items;
    for (std::string_view item : Split(rest.substr(colon + 1), ',')) {
      if (item.substr(0, 3) == "end") {
        items.push_back(RotationItem::End(Ref(item, "end")));
      } else {
        items.push_back(RotationItem::Edge(Ref(item, "e")));
      }
    }
    Store(rotations_, v, std::move(items), "rotation");
  } else if (key == "end") {
    const auto f = Split(rest, ' ');
    if (f.size() != 5 || f[1] != "at") {
      Syntax("expected: end: id at v<id> flank(L,R) axial(0|1)");
    }
    const auto flank = Split(Wrapped(f[3], "flank"), ',');
    if (flank.size() != 2) Syntax("flank needs two labels");
    Store(ends_, Int(f[0]),
          RawEnd{Ref(f[2], "v"), std::string(flank[0]), std::string(flank[1]),
                 Flag(Wrapped(f[4], "axial"))},
          "end");
  } else if (key == "involution") {
    const auto arrow = rest.find("<->");
    if (arrow == std::string_view::npos) Syntax("expected x<->y");
    const auto a = Trim(rest.substr(0, arrow));
    const auto b = Trim(rest.substr(arrow + 3));
    if (a.substr(0, 3) == "end") {
      end_pairs_.push_back({{Ref(a, "end"), Ref(b, "end")}, line_});
    } else {
      vertex_pairs_.push_back({{Ref(a, "v"), Ref(b, "v")}, line_});
    }
  } else {
    Syntax("unknown section '" + std::string(key) + "'");
  }
}

SpeiserTree Parser::Run() {
  bool header = false;
  std::string_view rest = text_;
  while (!rest.empty()) {
    const auto nl = rest.find('\n');
    std::string_view raw = rest.substr(0, nl);
    rest = nl == std::string_view::npos ? std::string_view{}
                                        : rest.substr(nl + 1);
    ++line_;
    const auto hash = raw.find('#');
    const std::string_view text = Trim(raw.substr(0, hash));
    if (text.empty()) continue;
    if (!header) {
      if (text != kHeader) Syntax("expected header '" + std::string(kHeader) + "'");
      header = true;
      continue;
    }
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) Syntax("expected 'section: ...'");
    Line(Trim(text.substr(0, colon)), Trim(text.substr(colon + 1)));
  }
  ++line_;
  if (!header) Syntax("missing header '" + std::string(kHeader) + "'");
  if (!base_) Syntax("missing basepoints: line");

  auto dense = [&](const auto& m, const char* what) {
    int expect = 0;
    for (const auto& [id, entry] : m) {
      if (id != expect) {
        line_ = entry.second;
        Invariant(std::string(what) + " ids must be 0.." +
                  std::to_string(m.size() - 1));
      }
      ++expect;
    }
  };
  dense(vertices_, "vertex");
  dense(edges_, "edge");
  dense(ends_, "end");
  const int nv = static_cast<int>(vertices_.size());
  const int ne = static_cast<int>(edges_.size());
  const int nends = static_cast<int>(ends_.size());

  SpeiserTree::Parts parts;
  parts.base = *base_;
  for (const auto& [id, entry] : vertices_) parts.vertices.push_back(entry.first);
  for (const auto& [id, entry] : edges_) {
    line_ = entry.second;
    const TreeEdge& e = entry.first;
    if (e.u >= nv || e.v >= nv) {
      Invariant("edge e" + std::to_string(id) + " references unknown vertex");
    }
    parts.edges.push_back(e);
  }
  parts.rotation.resize(nv);
  for (const auto& [v, entry] : rotations_) {
    line_ = entry.second;
    if (v >= nv) Invariant("rotation for unknown vertex v" + std::to_string(v));
    for (const RotationItem& item : entry.first) {
      const bool edge = item.kind == RotationItem::Kind::kEdge;
      if (item.id >= (edge ? ne : nends)) {
        Invariant("rotation of v" + std::to_string(v) + " references unknown " +
                  (edge ? "edge e" : "end") + std::to_string(item.id));
      }
    }
    parts.rotation[v] = entry.first;
  }
  for (const auto& [id, entry] : ends_) {
    line_ = entry.second;
    const RawEnd& raw = entry.first;
    if (raw.vertex >= nv) {
      Invariant("end" + std::to_string(id) + " attached to unknown vertex");
    }
    auto label = [&](const std::string& name) {
      const auto l = base_->Find(name);
      if (!l) Invariant("unknown base point '" + name + "'");
      return *l;
    };
    parts.ends.push_back(
        TreeEnd{raw.vertex, label(raw.left), label(raw.right), raw.axial});
  }
  if (axis_) {
    line_ = axis_line_;
    if (axis_->from >= nv || axis_->to >= nv) {
      Invariant("axis orientation references unknown vertex");
    }
    parts.axis_orientation = axis_;
  }
  if (!vertex_pairs_.empty() || !end_pairs_.empty()) {
    TreeInvolution s{std::vector<int>(nv, -1), std::vector<int>(nends, -1)};
    auto pair_up = [&](std::vector<int>& map, const auto& pairs,
                       const char* what) {
      for (const auto& [ab, at] : pairs) {
        line_ = at;
        const auto [a, b] = ab;
        const int n = static_cast<int>(map.size());
        if (a >= n || b >= n) Invariant(std::string("involution names unknown ") + what);
        if ((map[a] != -1 && map[a] != b) || (map[b] != -1 && map[b] != a)) {
          Invariant(std::string("involution maps a ") + what + " twice");
        }
        map[a] = b;
        map[b] = a;
      }
      for (int i = 0; i < static_cast<int>(map.size()); ++i) {
        if (map[i] == -1) {
          Invariant(std::string("involution leaves ") + what + " " +
                    std::to_string(i) + " unmapped");
        }
      }
    };
    pair_up(s.vertex_map, vertex_pairs_, "vertex");
    pair_up(s.end_map, end_pairs_, "end");
    parts.involution = std::move(s);
  }
  return SpeiserTree::Create(std::move(parts));
}

}  // namespace

std::string format_complex(const ExtendedComplex& z) {
  if (z.infinite) return "inf";
  const double re = z.value.real();
  const double im = z.value.imag();
  std::string out = FormatDouble(re);
  const std::string i = FormatDouble(im);
  out += (i.front() == '-' ? "" : "+") + i + "i";
  return out;
}

ExtendedComplex parse_complex(std::string_view text) {
  const std::string_view s = Trim(text);
  auto bad = [&]() -> ExtendedComplex {
    throw Error(ErrorCode::kSyntaxError,
                "malformed complex number '" + std::string(s) + "'");
  };
  if (s == "inf") return ExtendedComplex::Infinity();
  if (s.empty()) return bad();
  if (s.back() != 'i') {
    const auto re = ParseDouble(s);
    if (!re) return bad();
    return {{*re, 0.0}, false};
  }
  const std::string_view body = s.substr(0, s.size() - 1);
  // The imaginary part starts at the last sign that is not an exponent sign.
  std::size_t at = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' &&
        body[k - 1] != 'E') {
      at = k;
      break;
    }
  }
  std::optional<double> re = 0.0, im;
  std::string_view imag = body;
  if (at != std::string_view::npos) {
    re = ParseDouble(body.substr(0, at));
    imag = body.substr(at);
  }
  if (imag.empty() || imag == "+") {
    im = 1.0;
  } else if (imag == "-") {
    im = -1.0;
  } else {
    im = ParseDouble(imag);
  }
  if (!re || !im) return bad();
  return {{*re, *im}, false};
}

std::string serialize_tree(const SpeiserTree& tree) {
  std::string out(kHeader);
  out += "\nbasepoints: ";
  const BasePointSet& base = tree.base();
  for (LabelId l = 0; l < base.size(); ++l) {
    if (l > 0) out += ',';
    out += base.label(l).name + "=" + format_complex(base.label(l).value);
  }
  out += '\n';
  if (const auto& o = tree.axis_orientation()) {
    out += "axis-orientation: v" + std::to_string(o->from) + " -> v" +
           std::to_string(o->to) + "\n";
  }
  for (int v = 0; v < tree.vertex_count(); ++v) {
    const TreeVertex& tv = tree.vertices()[v];
    out += "vertex: " + std::to_string(v) +
           (tv.parity == Parity::kCross ? " x " : " o ") +
           (tv.on_axis ? "1" : "0") + "\n";
  }
  for (std::size_t e = 0; e < tree.edges().size(); ++e) {
    out += "edge: " + std::to_string(e) + " v" +
           std::to_string(tree.edges()[e].u) + " v" +
           std::to_string(tree.edges()[e].v) + "\n";
  }
  for (int v = 0; v < tree.vertex_count(); ++v) {
    out += "rotation: v" + std::to_string(v) + ":";
    const auto& rot = tree.rotation(v);
    for (std::size_t i = 0; i < rot.size(); ++i) {
      out += i == 0 ? " " : ",";
      out += (rot[i].kind == RotationItem::Kind::kEdge ? "e" : "end") +
             std::to_string(rot[i].id);
    }
    out += '\n';
  }
  for (int k = 0; k < tree.end_count(); ++k) {
    const TreeEnd& end = tree.ends()[k];
    out += "end: " + std::to_string(k) + " at v" + std::to_string(end.vertex) +
           " flank(" + base.label(end.left).name + "," +
           base.label(end.right).name + ") axial(" + (end.axial ? "1" : "0") +
           ")\n";
  }
  if (const auto& s = tree.involution()) {
    for (std::size_t v = 0; v < s->vertex_map.size(); ++v) {
      if (s->vertex_map[v] < static_cast<int>(v)) continue;
      out += "involution: v" + std::to_string(v) + "<->v" +
             std::to_string(s->vertex_map[v]) + "\n";
    }
    for (std::size_t k = 0; k < s->end_map.size(); ++k) {
      if (s->end_map[k] < static_cast<int>(k)) continue;
      out += "involution: end" + std::to_string(k) + "<->end" +
             std::to_string(s->end_map[k]) + "\n";
    }
  }
  return out;
}

SpeiserTree parse_tree_file(std::string_view text) {
  return Parser(text).Run();
}

}  // namespace speiser
