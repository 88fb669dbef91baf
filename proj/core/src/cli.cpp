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

#include "speiser/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "speiser/axioms.hpp"
#include "speiser/basis.hpp"
#include "speiser/catalog.hpp"
#include "speiser/dot_export.hpp"
#include "speiser/errors.hpp"
#include "speiser/extension.hpp"
#include "speiser/involution.hpp"
#include "speiser/real_zeros.hpp"
#include "speiser/schwarzian.hpp"
#include "speiser/sectors.hpp"
#include "speiser/tree_file.hpp"
#include "speiser/zero_analysis.hpp"

namespace speiser {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string Fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
  return buf;
}

std::string Fmt(Complex z) {
  return format_complex({{std::stod(Fmt(z.real())), std::stod(Fmt(z.imag()))},
                         false});
}

std::string Fmt(const ExtendedComplex& z) {
  return z.infinite ? "inf" : Fmt(z.value);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void WriteOutput(const std::string& path, const std::string& text,
                 std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw UsageError("cannot write " + path);
}

std::vector<std::string> Fields(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.push_back("");
  return out;
}

double Number(const std::string& s, const char* what) {
  try {
    const ExtendedComplex z = parse_complex(s);
    if (!z.infinite && z.value.imag() == 0.0) return z.value.real();
  } catch (const Error&) {
  }
  throw UsageError(std::string("bad ") + what + " '" + s + "'");
}

Complex ComplexArg(const std::string& s, const char* what) {
  try {
    const ExtendedComplex z = parse_complex(s);
    if (!z.infinite) return z.value;
  } catch (const Error&) {
  }
  throw UsageError(std::string("bad ") + what + " '" + s + "'");
}

RealPolynomial Poly(const std::string& s) {
  std::vector<double> c;
  for (const std::string& f : Fields(s, ',')) c.push_back(Number(f, "coefficient"));
  if (c.empty()) throw UsageError("--poly needs at least one coefficient");
  try {
    return RealPolynomial(std::move(c));
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

int ExitFor(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kStepUnderflow:
    case ErrorCode::kOverflowGuard:
    case ErrorCode::kPoleTooClose:
    case ErrorCode::kCriticalPoint:
    case ErrorCode::kNoConvergence:
    case ErrorCode::kZeroPolynomial:
      return kExitNumerical;
    case ErrorCode::kInvalidArgument:
      return kExitUsage;
    default:
      return kExitInvalid;
  }
}

SpeiserTree LoadTree(const std::string& path) {
  return parse_tree_file(ReadFile(path));
}

int Validate(const std::string& path, int depth, std::ostream& out) {
  const SpeiserTree tree = LoadTree(path);
  const SpeiserGraph graph = extend_tree(tree, depth);
  const AxiomReport axioms = validate_axioms(graph);
  bool ok = axioms.passed();
  std::string symmetry;
  if (tree.involution()) {
    const auto s = find_involution(graph);
    ok = ok && s.has_value();
    symmetry = s ? "symmetry: pass\n" : "symmetry: FAIL (no involution)\n";
  }
  out << (ok ? "valid" : "invalid") << "\n";
  out << "depth " << depth << ": " << graph.vertex_count() << " vertices, "
      << graph.edges().size() << " edges, " << graph.faces().size()
      << " faces\n";
  out << axioms.Describe() << symmetry;
  return ok ? kExitOk : kExitInvalid;
}

int Extend(const std::string& path, int depth, const std::string& out_path,
           std::ostream& out) {
  const SpeiserTree tree = LoadTree(path);
  const SpeiserGraph graph = extend_tree(tree, depth);
  out << "extended to depth " << depth << ": " << graph.vertex_count()
      << " vertices, " << graph.edges().size() << " edges, "
      << graph.faces().size() << " faces\n";
  WriteOutput(out_path, serialize_tree(expand_ends(tree, depth)), out);
  return kExitOk;
}

int Classify(const std::string& path, int depth, std::ostream& out) {
  const SpeiserGraph graph = extend_tree(LoadTree(path), depth);
  const ZeroSetClass c = classify_zero_set(graph);
  out << c.Token() << "\n";
  if (c.witness) out << "witness v" << *c.witness << "\n";
  return kExitOk;
}

int Catalog(int degree, const std::string& variant, const std::string& out_path,
            std::ostream& out) {
  CatalogVariant v;
  if (variant == "infinite") {
    v = CatalogVariant::Infinite();
  } else if (variant.rfind("finite:", 0) == 0) {
    const std::string k = variant.substr(7);
    if (k.empty() || k.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("bad variant '" + variant + "'");
    }
    v = CatalogVariant::FiniteZeros(std::stoi(k));
  } else {
    throw UsageError("variant must be infinite or finite:K, got '" + variant +
                     "'");
  }
  WriteOutput(out_path, serialize_tree(catalog_tree(degree, v)), out);
  return kExitOk;
}

int Zeros(const std::string& poly, const std::string& init,
          const std::string& range, double tol, std::ostream& out,
          std::ostream& err) {
  const RealPolynomial p = Poly(poly);
  const auto f = Fields(init, ',');
  if (f.size() != 3) throw UsageError("--init needs z0,w0,w0p");
  const InitialData data{ComplexArg(f[0], "z0"), ComplexArg(f[1], "w0"),
                         ComplexArg(f[2], "w0p")};
  const auto colon = range.find(':', 1);
  if (colon == std::string::npos) throw UsageError("--range needs a:b");
  const double a = Number(range.substr(0, colon), "range");
  const double b = Number(range.substr(colon + 1), "range");
  const RealZeroSet zs = real_zeros(p, data, a, b, tol);
  for (double x : zs.zeros) out << Fmt(x) << "\n";
  for (const ZeroWarning& w : zs.warnings) err << "warning: " << w.message << "\n";
  return kExitOk;
}

int Schwarzian(const std::string& poly, const std::string& at,
               const std::string& z0, double h, double tol, std::ostream& out) {
  const RealPolynomial p = Poly(poly);
  const Complex z = ComplexArg(at, "point");
  const SolutionBasis basis = solution_basis(p, ComplexArg(z0, "z0"), tol);
  const SchwarzianReport r = schwarzian_residual(basis, {z}, h);
  out << "residual " << Fmt(r.max_residual) << "\n";
  out << "schwarzian " << Fmt(r.points[0].schwarzian) << "\n";
  out << "2P " << Fmt(2.0 * p(z)) << "\n";
  return kExitOk;
}

int Sectors(const std::string& poly, const std::string& schedule,
            double tol, std::ostream& out) {
  const RealPolynomial p = Poly(poly);
  SectorOptions options;
  if (!schedule.empty()) {
    options.radii.clear();
    for (const std::string& r : Fields(schedule, ',')) {
      options.radii.push_back(Number(r, "radius"));
    }
  }
  if (tol > 0.0) options.tol = tol;
  const SolutionBasis basis = solution_basis(p, 0.0);
  const SectorReport report = sector_report(p, basis, options);
  out << "rays " << report.rays.size() << "\n";
  for (std::size_t j = 0; j < report.rays.size(); ++j) {
    const RayOutcome& ray = report.rays[j];
    out << "ray " << j << " angle " << Fmt(ray.angle) << " ";
    if (ray.converged) {
      out << "converged " << Fmt(ray.value) << " gap " << Fmt(ray.gap);
    } else if (!ray.error.empty()) {
      out << "failed " << ray.error;
    } else {
      out << "divergent gap " << Fmt(ray.gap);
    }
    out << "\n";
  }
  out << "groups " << report.groups.size() << "\n";
  return report.converged_count() == static_cast<int>(report.rays.size())
             ? kExitOk
             : kExitNumerical;
}

int ExportDot(const std::string& path, std::optional<int> depth,
              const std::string& out_path, std::ostream& out) {
  const SpeiserTree tree = LoadTree(path);
  WriteOutput(out_path,
              depth ? export_dot(extend_tree(tree, *depth)) : export_dot(tree),
              out);
  return kExitOk;
}

// Value options may start with '-' (negative numbers); glue them to their
// flag so the parser does not read them as options.
std::vector<std::string> GlueValues(const std::vector<std::string>& args) {
  static const char* kValued[] = {"--poly", "--init", "--range", "--at",
                                  "--z0",   "--h",    "--tol"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    bool glued = false;
    for (const char* flag : kValued) {
      if (args[i] == flag && i + 1 < args.size() && !args[i + 1].empty() &&
          args[i + 1][0] == '-' && args[i + 1].rfind("--", 0) != 0) {
        out.push_back(args[i] + "=" + args[i + 1]);
        ++i;
        glued = true;
        break;
      }
    }
    if (!glued) out.push_back(args[i]);
  }
  return out;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Symmetric Speiser graphs and the equation w'' + P w = 0",
               "speiser"};
  app.require_subcommand(1);
  // `-h` stays free for the schwarzian step option.
  app.set_help_flag("--help", "print this help and exit");

  std::string file, out_path, variant, poly, init, range, at, z0 = "0",
                                                             schedule;
  int depth = 2;
  int degree = 0;
  std::optional<int> dot_depth;
  double tol = 1e-12, h = 1e-3, sector_tol = 0.0;

  auto* validate = app.add_subcommand("validate", "check the axioms of the depth-K extension");
  validate->add_option("FILE", file, "tree file")->required();
  validate->add_option("--depth", depth, "periods per end")->check(CLI::NonNegativeNumber);

  auto* extend = app.add_subcommand("extend", "materialize K periods of every end");
  extend->add_option("FILE", file, "tree file")->required();
  extend->add_option("--depth", depth, "periods per end")->required()->check(CLI::NonNegativeNumber);
  extend->add_option("--out", out_path, "output tree file");

  auto* classify = app.add_subcommand("classify", "print the zero-set class");
  classify->add_option("FILE", file, "tree file")->required();
  classify->add_option("--depth", depth, "periods per end")->check(CLI::PositiveNumber);

  auto* catalog = app.add_subcommand("catalog", "write a catalog tree");
  catalog->add_option("--degree", degree, "degree d")->required();
  catalog->add_option("--variant", variant, "infinite or finite:K")->required();
  catalog->add_option("--out", out_path, "output tree file");

  auto* zeros = app.add_subcommand("zeros", "real zeros of a real solution");
  zeros->add_option("--poly", poly, "coefficients c0,c1,... ascending")->required();
  zeros->add_option("--init", init, "z0,w0,w0p")->required();
  zeros->add_option("--range", range, "interval a:b")->required();
  zeros->add_option("--tol", tol, "integration tolerance");

  auto* schwarzian = app.add_subcommand("schwarzian", "Schwarzian residual of w1/w2 at a point");
  schwarzian->add_option("--poly", poly, "coefficients c0,c1,... ascending")->required();
  schwarzian->add_option("--at", at, "sample point x+yi")->required();
  schwarzian->add_option("--h", h, "stencil step");
  schwarzian->add_option("--z0", z0, "basis origin");
  schwarzian->add_option("--tol", tol, "integration tolerance");

  auto* sectors = app.add_subcommand("sectors", "asymptotic values along the d+2 rays");
  sectors->add_option("--poly", poly, "coefficients c0,c1,... ascending")->required();
  sectors->add_option("--radius-schedule", schedule, "radii R1,R2,...");
  sectors->add_option("--tol", sector_tol, "Cauchy tolerance");

  auto* dot = app.add_subcommand("export-dot", "write Graphviz text");
  dot->add_option("FILE", file, "tree file")->required();
  dot->add_option("--out", out_path, "output .dot file");
  dot->add_option("--depth", dot_depth, "export the depth-K extension instead");

  const std::vector<std::string> glued = GlueValues(args);
  std::vector<const char*> argv;
  for (const std::string& a : glued) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate) return Validate(file, depth, out);
    if (*extend) return Extend(file, depth, out_path, out);
    if (*classify) return Classify(file, depth, out);
    if (*catalog) return Catalog(degree, variant, out_path, out);
    if (*zeros) return Zeros(poly, init, range, tol, out, err);
    if (*schwarzian) return Schwarzian(poly, at, z0, h, tol, out);
    if (*sectors) return Sectors(poly, schedule, sector_tol, out);
    if (*dot) return ExportDot(file, dot_depth, out_path, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitFor(e);
  }
  return kExitUsage;
}

}  // namespace speiser
