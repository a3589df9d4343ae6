// Copyright 2026 The rtile Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Outcome {
  int exit_code = -1;
  std::string output;  // stdout and stderr
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("rtile_cli_test_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string data(const std::string& name) {
    return std::string(RTILE_TEST_DATA) + "/" + name;
  }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }
  static std::string read(const std::string& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  static Outcome run(const std::string& args) {
    Outcome r;
    const std::string command = std::string(RTILE_CLI) + " " + args + " 2>&1";
    FILE* pipe = ::popen(command.c_str(), "r");
    if (!pipe) return r;
    char buffer[4096];
    std::size_t n;
    while ((n = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) r.output.append(buffer, n);
    const int status = ::pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  fs::path dir_;
};

TEST_F(CliTest, ReduceWritesInstanceAndCertificate) {
  const Outcome r = run("reduce " + data("single_clause.cnf") + " -o " +
                    path("f.inst") + " --cert " + path("f.cert"));
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("verification passed"), std::string::npos);
  EXPECT_EQ(read(path("f.inst")).rfind("rtile ", 0), 0u);
  EXPECT_EQ(read(path("f.cert")).rfind("formula vars 3 clauses 1\n", 0), 0u);
}

TEST_F(CliTest, ReduceRejectsNonPlanarFormula) {
  const Outcome r = run("reduce " + data("k33.cnf") + " -o " + path("x.inst"));
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.output.find("not planar"), std::string::npos) << r.output;
}

TEST_F(CliTest, ReduceMissingFile) {
  EXPECT_EQ(run("reduce " + path("missing.cnf") + " -o " + path("x.inst")).exit_code, 2);
}

TEST_F(CliTest, SolveDecideExitCodes) {
  const std::string one = write("one.inst", "rtile 1 1 3\n3\n");
  const std::string four = write("four.inst", "rtile 2 3 3\n3 3\n3 3\n");
  const std::string garbage = write("garbage.inst", "not an instance\n");
  const Outcome yes = run("solve " + one + " --decide 1 3 --out " + path("one.til"));
  EXPECT_EQ(yes.exit_code, 0) << yes.output;
  EXPECT_EQ(read(path("one.til")), "0 0 0 0\n");
  EXPECT_EQ(run("solve " + four + " --decide 3 3").exit_code, 1);
  EXPECT_EQ(run("solve " + garbage + " --decide 1 3").exit_code, 2);
  EXPECT_EQ(run("solve " + one).exit_code, 2);
}

TEST_F(CliTest, SolveOptimize) {
  const std::string inst = write("g.inst", "rtile 2 2 9\n1 2\n2 1\n");
  const Outcome r = run("solve " + inst + " --optimize 2 --out " + path("g.til"));
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("optimum W = 3"), std::string::npos) << r.output;
  EXPECT_EQ(run("verify " + inst + " " + path("g.til") + " --W 3").exit_code, 0);
}

TEST_F(CliTest, SearchLimitFromEnvironment) {
  const std::string inst = write("s.inst", "rtile 3 9 3\n1 1 1\n1 1 1\n1 1 1\n");
  EXPECT_EQ(run("solve " + inst + " --decide 3 3 --method exact").exit_code, 0);
  const std::string limited = "RTILE_SEARCH_LIMIT=1 " + std::string(RTILE_CLI) +
                              " solve " + inst + " --decide 3 3 --method exact";
  EXPECT_EQ(WEXITSTATUS(std::system((limited + " > /dev/null 2>&1").c_str())), 2);
}

TEST_F(CliTest, VerifyReportsViolations) {
  const std::string inst = write("v.inst", "rtile 2 2 3\n1 2\n2 1\n");
  const std::string good = write("good.til", "0 0 0 1\n1 0 1 1\n");
  const std::string gap = write("gap.til", "0 0 0 1\n");
  EXPECT_EQ(run("verify " + inst + " " + good).exit_code, 0);
  const Outcome r = run("verify " + inst + " " + gap);
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.output.find("gap at 1,0"), std::string::npos) << r.output;
  EXPECT_EQ(run("verify " + inst + " " + good + " --p 1").exit_code, 1);
}

TEST_F(CliTest, RoundtripAgreesOnSatisfiableClause) {
  const Outcome r = run("roundtrip " + data("single_clause.cnf"));
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("sat <=> tileable: agree"), std::string::npos);
}

TEST_F(CliTest, RoundtripAgreesOnUnsatisfiableFormula) {
  const Outcome r = run("roundtrip " + data("unsat_u1.cnf"));
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("unsat <=> untileable: agree"), std::string::npos);
}

TEST_F(CliTest, RoundtripRejectsOversizedFormula) {
  // 27 variables in 9 disjoint clauses: planar, too many for brute force.
  std::string text = "p cnf 27 9\n";
  for (int j = 0; j < 9; ++j) {
    text += std::to_string(3 * j + 1) + " " + std::to_string(3 * j + 2) + " " +
            std::to_string(3 * j + 3) + " 0\n";
  }
  EXPECT_EQ(run("roundtrip " + write("big.cnf", text)).exit_code, 2);
}

TEST_F(CliTest, RenderAsciiWithoutTiling) {
  const std::string inst = write("r.inst", "rtile 2 4 3\n3 3\n3 3\n");
  EXPECT_EQ(run("render " + inst + " --format ascii -o " + path("r.txt")).exit_code, 0);
  EXPECT_EQ(read(path("r.txt")), "3 3\n3 3\n");
}

TEST_F(CliTest, RenderAsciiOutlinesTiles) {
  const std::string inst = write("r.inst", "rtile 2 3 3\n1 2\n1 1\n");
  const std::string til = write("r.til", "0 0 1 0\n0 1 0 1\n1 1 1 1\n");
  const Outcome r = run("render " + inst + " --tiling " + til);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output,
            "┌─┬─┐\n"
            "│1│2│\n"
            "│ ├─┤\n"
            "│1│1│\n"
            "└─┴─┘\n");
}

TEST_F(CliTest, RenderSvgSnapshot) {
  const std::string inst = write("r.inst", "rtile 2 3 3\n1 2\n1 1\n");
  const std::string til = write("r.til", "0 0 1 0\n0 1 0 1\n1 1 1 1\n");
  const Outcome r = run("render " + inst + " --tiling " + til + " --format svg -o " +
                    path("r.svg"));
  EXPECT_EQ(r.exit_code, 0) << r.output;
  const std::string svg = read(path("r.svg"));
  EXPECT_EQ(svg, read(data("render_2x2.svg")));
  std::size_t groups = 0;
  for (std::size_t at = svg.find("<g class=\"tile\">"); at != std::string::npos;
       at = svg.find("<g class=\"tile\">", at + 1))
    ++groups;
  EXPECT_EQ(groups, 3u);
}

TEST_F(CliTest, RenderRejectsMismatchedTiling) {
  const std::string inst = write("r.inst", "rtile 1 1 3\n3\n");
  const std::string til = write("r.til", "0 0 1 1\n");
  EXPECT_EQ(run("render " + inst + " --tiling " + til).exit_code, 2);
}

TEST_F(CliTest, CertifyGadget) {
  const Outcome r = run("certify-gadget");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("result PASS"), std::string::npos);
}

TEST_F(CliTest, GenIsDeterministicAndValidated) {
  EXPECT_EQ(run("gen --vars 3 --clauses 1 --seed 9 -o " + path("a.cnf")).exit_code, 0);
  EXPECT_EQ(run("gen --vars 3 --clauses 1 --seed 9 -o " + path("b.cnf")).exit_code, 0);
  EXPECT_EQ(read(path("a.cnf")), read(path("b.cnf")));
  EXPECT_EQ(read(path("a.cnf")).rfind("p cnf 3 1\n", 0), 0u);
  EXPECT_EQ(run("gen --vars 0 --clauses 1 --seed 9 -o " + path("c.cnf")).exit_code, 2);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run("").exit_code, 2);
  EXPECT_EQ(run("frobnicate").exit_code, 2);
  EXPECT_EQ(run("--help").exit_code, 0);
}

}  // namespace
