// Copyright 2026 The gf2crit Authors.
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

#include "gf2crit/cli.h"

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gf2crit/constructions.h"
#include "gf2crit/pointset_io.h"
#include "gf2crit/report.h"

namespace gf2crit {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("gf2crit_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  int run(const std::vector<std::string>& args) {
    out_.str("");
    err_.str("");
    return run_cli(args, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, AnalyzeFano) {
  const std::string f = write("fano.pts", render_pointset(pg(3)));
  EXPECT_EQ(run({"analyze", f, "--all"}), exit_code::kOk);
  EXPECT_EQ(out_.str(),
            "chi=3 girth=3 triangles=7 uniformity=1/8 density=7/8 class=n/a\n");
  EXPECT_EQ(run({"analyze", f, "--json"}), exit_code::kOk);
  const Json j = Json::parse(out_.str());
  EXPECT_EQ(j.at("chi"), 3);
  EXPECT_EQ(j.at("girth"), 3);
  EXPECT_EQ(j.at("triangles"), 7);
  EXPECT_EQ(j.at("density"), "7/8");
  EXPECT_EQ(j.at("uniformity"), "1/8");
}

TEST_F(CliTest, AnalyzeSelectedAndEmpty) {
  const std::string e = write("empty.pts", "dim 4\n");
  EXPECT_EQ(run({"analyze", e, "--chi"}), exit_code::kOk);
  EXPECT_EQ(out_.str(), "chi=0\n");
  const std::string c3 = write("c3.pts", "dim 2\n01\n10\n11\n");
  EXPECT_EQ(run({"analyze", c3, "--classify", "--girth"}), exit_code::kOk);
  EXPECT_EQ(out_.str(), "girth=3 class=N14\n");
  const std::string basis = write("basis.pts", "dim 3\n100\n010\n001\n");
  EXPECT_EQ(run({"analyze", basis, "--girth"}), exit_code::kOk);
  EXPECT_EQ(out_.str(), "girth=none\n");
}

TEST_F(CliTest, ParseErrorsExitTwo) {
  const std::string bad = write("bad.pts", "dim 3\n000\n");
  EXPECT_EQ(run({"analyze", bad}), exit_code::kParse);
  EXPECT_NE(err_.str().find("line 2"), std::string::npos);
  EXPECT_EQ(run({"analyze", path("missing.pts")}), exit_code::kParse);
}

TEST_F(CliTest, ConstructWritesFileAndSidecar) {
  const std::string out = path("m17.pts");
  EXPECT_EQ(run({"construct", "mcn", "--c", "1", "--n", "7", "-o", out}), exit_code::kOk);
  EXPECT_EQ(read_pointset_file(out), mcn({1, 7}));
  std::ifstream side(out + ".json");
  const Json j = Json::parse(side);
  EXPECT_EQ(j.at("kind"), "mcn");
  EXPECT_EQ(j.at("size"), mcn({1, 7}).size());

  EXPECT_EQ(run({"construct", "pg", "--r", "3"}), exit_code::kOk);
  EXPECT_EQ(parse_pointset(out_.str()).size(), 7u);
}

TEST_F(CliTest, ConstructGirthgenRecordsSeed) {
  const std::string out = path("g.pts");
  EXPECT_EQ(run({"construct", "girthgen", "--n", "10", "--g", "4", "--c", "2", "--seed",
                 "1", "-o", out}),
            exit_code::kOk);
  std::ifstream side(out + ".json");
  EXPECT_EQ(Json::parse(side).at("seed"), 1);
}

TEST_F(CliTest, ConstructBudgetExitFour) {
  EXPECT_EQ(run({"construct", "girthgen", "--n", "6", "--g", "7", "--c", "4", "--m", "30",
                 "--max-attempts", "5"}),
            exit_code::kBudget);
}

TEST_F(CliTest, ConstructEmbedNeedsBase) {
  EXPECT_EQ(run({"construct", "embed", "--c", "3"}), exit_code::kUsage);
  const std::string base = write("base.pts", render_pointset(pg(3)));
  EXPECT_EQ(run({"construct", "embed", "--c", "3", "--base", base}), exit_code::kOk);
  EXPECT_EQ(parse_pointset(out_.str()).size(), 15u);
}

TEST_F(CliTest, RegularityAffineSlice) {
  const std::string f = write("slice.pts", render_pointset(ag(4)));
  EXPECT_EQ(run({"regularity", f, "--eps", "0.4", "--json"}), exit_code::kOk);
  const Json j = Json::parse(out_.str());
  EXPECT_EQ(j.at("codim"), 1);
  EXPECT_EQ(j.at("basis"), Json({"0100", "0010", "0001"}));
  EXPECT_EQ(j.at("trace").size(), 1u);
  EXPECT_EQ(run({"regularity", f, "--eps", "0.6"}), exit_code::kUsage);
  EXPECT_EQ(run({"regularity", f, "--eps", "0.4", "--max-codim", "0"}), exit_code::kBudget);
  EXPECT_NE(out_.str().find("trace"), std::string::npos);
}

TEST_F(CliTest, VerifyExitCodes) {
  EXPECT_EQ(run({"verify", "trifreevectors", "--n", "6", "--trials", "100", "--seed", "7"}),
            exit_code::kOk);
  EXPECT_EQ(run({"verify", "mcn", "--c", "1", "--n-from", "4", "--n-to", "12", "--json"}),
            exit_code::kOk);
  const Report r = report_from_json(Json::parse(out_.str()));
  EXPECT_EQ(r.check, "mcn");
  EXPECT_EQ(r.details.at("rows").size(), 9u);
  EXPECT_EQ(run({"verify", "nullspace", "--c", "1", "--s", "2", "--n", "4"}),
            exit_code::kHypothesisNotMet);
  EXPECT_EQ(run({"verify", "nosuch"}), exit_code::kUsage);
  EXPECT_EQ(run({"verify", "sumlemma", "--eps", "0.5"}), exit_code::kUsage);
}

TEST_F(CliTest, JsonIsStableForSeededRuns) {
  ASSERT_EQ(run({"verify", "sumlemma", "--n", "8", "--trials", "5", "--json"}), 0);
  Json a = Json::parse(out_.str());
  ASSERT_EQ(run({"verify", "sumlemma", "--n", "8", "--trials", "5", "--json"}), 0);
  Json b = Json::parse(out_.str());
  a.erase("wall_time_ms");
  b.erase("wall_time_ms");
  EXPECT_EQ(a, b);
}

TEST_F(CliTest, HelpAndUsage) {
  EXPECT_EQ(run({"--help"}), exit_code::kOk);
  EXPECT_EQ(run({}), exit_code::kUsage);
  EXPECT_EQ(run({"analyze"}), exit_code::kUsage);
  EXPECT_EQ(run({"construct", "nosuch"}), exit_code::kUsage);
}

#ifdef GF2CRIT_BINARY
TEST_F(CliTest, CostCeilingFromEnvironmentExitsThree) {
  const std::string f = write("m18.pts", render_pointset(mcn({1, 8})));
  const std::string log = path("err.txt");
  const std::string cmd = std::string("GF2CRIT_COST_CEILING=10 ") + GF2CRIT_BINARY +
                          " analyze " + f + " --chi > /dev/null 2> " + log;
  const int status = std::system(cmd.c_str());
  ASSERT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), exit_code::kCostCeiling);
  std::ifstream in(log);
  const std::string msg((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_NE(msg.find("gaussian_binomial"), std::string::npos) << msg;
}
#endif

}  // namespace
}  // namespace gf2crit
