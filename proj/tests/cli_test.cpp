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

#include <gtest/gtest.h>

#include <unistd.h>

#include <complex>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "fixtures.hpp"
#include "speiser/catalog.hpp"
#include "speiser/cli.hpp"
#include "speiser/dot_export.hpp"
#include "speiser/errors.hpp"
#include "speiser/extension.hpp"
#include "speiser/isomorphism.hpp"
#include "speiser/tree_file.hpp"

namespace speiser {
namespace {

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;

  std::vector<std::string> Lines() const {
    std::vector<std::string> lines;
    std::istringstream in(out);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
  }
};

CliResult Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  args.insert(args.begin(), "speiser");
  CliResult r;
  r.code = run_command(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("speiser_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) const {
    const std::string path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }
  std::string Path(const std::string& name) const {
    return (dir_ / name).string();
  }

  std::filesystem::path dir_;
};

std::vector<std::pair<int, CatalogVariant>> CatalogCases() {
  std::vector<std::pair<int, CatalogVariant>> cases;
  for (int d : {1, 3, 4, 5, 7, 8, 9}) cases.push_back({d, CatalogVariant::Infinite()});
  for (int d : {2, 4, 6, 8}) {
    for (int k = 0; k <= 3; ++k) cases.push_back({d, CatalogVariant::FiniteZeros(k)});
  }
  return cases;
}

TEST(TreeFile, CatalogRoundTripIsByteStable) {
  for (const auto& [d, v] : CatalogCases()) {
    const std::string text = serialize_tree(catalog_tree(d, v));
    const SpeiserTree back = parse_tree_file(text);
    EXPECT_EQ(serialize_tree(back), text) << d << " " << v.Token();
    EXPECT_TRUE(is_isomorphic(extend_tree(back, 2), extend_tree(catalog_tree(d, v), 2)));
  }
}

TEST(TreeFile, FixturesRoundTrip) {
  for (const char* text :
       {testing::kLadder, testing::kExpPath, testing::kAlmostSymmetric}) {
    const std::string once = serialize_tree(parse_tree_file(text));
    EXPECT_EQ(serialize_tree(parse_tree_file(once)), once);
  }
}

TEST(TreeFile, CommentsAndSectionOrder) {
  const SpeiserTree t = parse_tree_file(R"(# exp
speiser-tree v1
end: 1 at v0 flank(inf,0) axial(0)
vertex: 0 x 0   # lone vertex
rotation: v0: end0,end1
end: 0 at v0 flank(0,inf) axial(0)
basepoints: 0=0,inf=inf
)");
  EXPECT_EQ(serialize_tree(t), serialize_tree(parse_tree_file(testing::kExpPath)));
}

TEST(TreeFile, Errors) {
  EXPECT_EQ(CodeOf([] { parse_tree_file("speiser-tree v1\nvertex: 0 x 0\n"); }),
            ErrorCode::kSyntaxError);
  EXPECT_EQ(CodeOf([] { parse_tree_file("speiser-tree v2\n"); }),
            ErrorCode::kSyntaxError);
  EXPECT_EQ(CodeOf([] {
              parse_tree_file(
                  "speiser-tree v1\nbasepoints: 0=0,inf=inf\nvertex: 0 x 0\n"
                  "rotation: v0: e4,end0\nend: 0 at v0 flank(0,inf) axial(0)\n");
            }),
            ErrorCode::kInvariantViolation);
  try {
    parse_tree_file("speiser-tree v1\nbasepoints: 0=0,inf=inf\nwobble: 1\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(TreeFile, ComplexLiterals) {
  EXPECT_EQ(format_complex({{1.0, -1.0}}), "1-1i");
  EXPECT_EQ(format_complex({{-0.0, 0.0}}), "0+0i");
  EXPECT_EQ(format_complex(ExtendedComplex::Infinity()), "inf");
  EXPECT_EQ(format_complex({{0.1, -0.0}}), "0.1+0i");
  EXPECT_EQ(parse_complex("2.5i").value, std::complex<double>(0.0, 2.5));
  EXPECT_EQ(parse_complex("-3+0.25i").value, std::complex<double>(-3.0, 0.25));
  EXPECT_TRUE(parse_complex("inf").infinite);
  EXPECT_EQ(CodeOf([] { parse_complex("1+i+"); }), ErrorCode::kSyntaxError);
}

TEST(DotExport, Stable) {
  const SpeiserTree t = catalog_tree(1, CatalogVariant::Infinite());
  const std::string dot = export_dot(t);
  EXPECT_EQ(dot, export_dot(parse_tree_file(serialize_tree(t))));
  EXPECT_EQ(dot.rfind("graph speiser_tree {", 0), 0u);
  std::size_t points = 0;
  for (std::size_t at = dot.find("[shape=point"); at != std::string::npos;
       at = dot.find("[shape=point", at + 1)) {
    ++points;
  }
  EXPECT_EQ(points, 3u);
  EXPECT_NE(export_dot(testing::Infinite(1, 1)).find("style=bold"),
            std::string::npos);
}

TEST_F(TempDir, CatalogValidateClassify) {
  const std::string file = Path("airy.tree");
  CliResult r = Cli({"catalog", "--degree", "1", "--variant", "infinite", "--out", file});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  r = Cli({"validate", file});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.Lines().front(), "valid");
  r = Cli({"classify", file});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.Lines().front(), "ray-negative");

  r = Cli({"catalog", "--degree", "5", "--variant", "infinite"});
  ASSERT_EQ(r.code, kExitOk);
  r = Cli({"classify", Write("five.tree", r.out)});
  EXPECT_EQ(r.Lines().front().rfind("ray-", 0), 0u);

  r = Cli({"catalog", "--degree", "4", "--variant", "finite:2"});
  r = Cli({"classify", Write("four.tree", r.out)});
  EXPECT_EQ(r.Lines().front(), "finite:2");
}

TEST_F(TempDir, CatalogStdoutMatchesSerialization) {
  const CliResult r = Cli({"catalog", "--degree", "3", "--variant", "infinite"});
  EXPECT_EQ(r.out, serialize_tree(catalog_tree(3, CatalogVariant::Infinite())));
}

TEST_F(TempDir, ExtendAndExport) {
  const std::string file = Write("ladder.tree", testing::kLadder);
  CliResult r = Cli({"extend", file, "--depth", "2", "--out", Path("ext.tree")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream in(Path("ext.tree"));
  const std::string text((std::istreambuf_iterator<char>(in)), {});
  EXPECT_EQ(parse_tree_file(text).vertex_count(), 1 + 2 * 2 * 2);
  r = Cli({"export-dot", file});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("graph speiser_tree {", 0), 0u);
  r = Cli({"export-dot", file, "--depth", "1"});
  EXPECT_EQ(r.out.rfind("graph speiser_graph {", 0), 0u);
}

TEST_F(TempDir, InvalidInputs) {
  EXPECT_EQ(Cli({"validate", Write("bad.tree", "speiser-tree v1\nvertex: 0\n")}).code,
            kExitInvalid);
  EXPECT_EQ(Cli({"validate", Path("missing.tree")}).code, kExitUsage);
  EXPECT_EQ(Cli({"catalog", "--degree", "6", "--variant", "infinite"}).code,
            kExitInvalid);
  EXPECT_EQ(Cli({"extend", Write("l.tree", testing::kLadder), "--depth", "-1"}).code,
            kExitUsage);
}

TEST(RunCommand, UsageErrors) {
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"bogus"}).code, kExitUsage);
  EXPECT_EQ(Cli({"zeros", "--poly", "1"}).code, kExitUsage);
  EXPECT_EQ(Cli({"zeros", "--poly", "x", "--init", "0,0,1", "--range", "0:1"}).code,
            kExitUsage);
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
}

TEST(RunCommand, Zeros) {
  const CliResult r = Cli({"zeros", "--poly", "1", "--init", "0,0,1", "--range", "-10:10"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto lines = r.Lines();
  ASSERT_EQ(lines.size(), 7u);
  EXPECT_NEAR(std::stod(lines[0]), -3 * std::numbers::pi, 1e-9);
  EXPECT_EQ(lines[3], "0");
}

TEST(RunCommand, SchwarzianAndSectors) {
  CliResult r = Cli({"schwarzian", "--poly", "1", "--at", "1.5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.Lines()[0].rfind("residual ", 0), 0u);
  EXPECT_LT(std::stod(r.Lines()[0].substr(9)), 1e-4);
  r = Cli({"schwarzian", "--poly", "1", "--at", "0"});
  EXPECT_EQ(r.code, kExitNumerical);

  r = Cli({"sectors", "--poly", "0,-1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto lines = r.Lines();
  EXPECT_EQ(lines.front(), "rays 3");
  EXPECT_EQ(lines.back(), "groups 3");
  EXPECT_NE(lines[1].find("converged"), std::string::npos);
  EXPECT_EQ(Cli({"sectors", "--poly", "0"}).code, kExitNumerical);
}

}  // namespace
}  // namespace speiser
