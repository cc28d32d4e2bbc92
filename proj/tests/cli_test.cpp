// Copyright 2026 The netcoop Authors
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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "netcoop/report.hpp"

namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("netcoop_cli_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(const std::string& args) {
    const std::string cmd = std::string(NETCOOP_CLI_PATH) + " " + args +
                            " >" + (dir_ / "stdout").string() + " 2>" +
                            (dir_ / "stderr").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string read(const std::string& name) {
    std::ifstream in(dir_ / name, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  std::string path(const std::string& name) { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, AnalyzeWritesCsvToStdout) {
  EXPECT_EQ(run("analyze"), 0);
  const std::string out = read("stdout");
  EXPECT_EQ(out.rfind(std::string(netcoop::report::kAnalyzeHeader) + "\n", 0),
            0u);
  EXPECT_NE(out.find("\ninter,"), std::string::npos);
}

TEST_F(CliTest, SweepWritesFileAndJson) {
  EXPECT_EQ(run("sweep --var cell --start 200 --stop 400 --points 3 --out " +
                path("s.csv")),
            0);
  const auto rows = netcoop::report::parse_sweep_csv(read("s.csv"));
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[1].swept_m, 300.0);

  EXPECT_EQ(run("sweep --points 4 --log --start 1 --stop 1000 --json"), 0);
  const auto j = nlohmann::json::parse(read("stdout"));
  ASSERT_EQ(j.size(), 4u);
  EXPECT_NEAR(j[1]["swept_m"].get<double>(), 10.0, 1e-12);
}

TEST_F(CliTest, ConfigFileIsApplied) {
  {
    std::ofstream cfg(path("c.cfg"));
    cfg << "d_12_m = 7\n";
  }
  EXPECT_EQ(run("sweep --config " + path("c.cfg") +
                " --var cell --start 500 --stop 600 --points 2"),
            0);
  netcoop::scenario::ScenarioConfig expected;
  expected.geo.d_12 = expected.geo.d_21 = 7.0;
  const auto row = netcoop::scenario::evaluate_point(
      expected, netcoop::scenario::SweepVariable::kCellDistance, 500.0);
  EXPECT_EQ(netcoop::report::parse_sweep_csv(read("stdout"))[0], row);
}

TEST_F(CliTest, UsageAndConfigErrorsExitOne) {
  EXPECT_EQ(run(""), 1);
  EXPECT_EQ(run("bogus"), 1);
  EXPECT_EQ(run("sweep --points 1"), 1);
  EXPECT_EQ(run("sweep --start 10 --stop 5"), 1);
  EXPECT_EQ(run("sweep --var nowhere"), 1);
  EXPECT_EQ(run("verify --trials 0"), 1);
  EXPECT_EQ(run("analyze --config " + path("missing.cfg")), 1);
  {
    std::ofstream cfg(path("bad.cfg"));
    cfg << "pout_target = 1.5\n";
  }
  EXPECT_EQ(run("analyze --config " + path("bad.cfg")), 1);
  EXPECT_NE(read("stderr").find("pout_target"), std::string::npos);
  EXPECT_EQ(run("analyze --out /nonexistent-dir/x.csv"), 1);
  EXPECT_EQ(run("--help"), 0);
}

TEST_F(CliTest, VerifyInconclusiveExitsZero) {
  EXPECT_EQ(run("verify --trials 100"), 0);
  EXPECT_NE(read("stdout").find("inconclusive"), std::string::npos);
}

TEST_F(CliTest, VerifyIsByteIdenticalAcrossThreading) {
  ASSERT_EQ(run("verify --trials 200000 --seed 9 --threads 1 --chunk 4096 "
                "--out " + path("a.csv")),
            0);
  ASSERT_EQ(run("verify --trials 200000 --seed 9 --threads 3 --chunk 50000 "
                "--out " + path("b.csv")),
            0);
  EXPECT_EQ(read("a.csv"), read("b.csv"));
  EXPECT_FALSE(read("a.csv").empty());
}

}  // namespace
