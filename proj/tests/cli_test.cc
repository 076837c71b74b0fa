// Copyright 2026 The tempsched Authors
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

#include "cli.h"

#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "gtest/gtest.h"
#include "tempsched/io.h"

namespace tempsched {
namespace {

std::string Fixture(const std::string& name) {
  return std::string(TEMPSCHED_FIXTURE_DIR) + "/" + name;
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "tempsched");
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

bool Contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("tempsched_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string Temp(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

TEST_F(CliTest, SolveSumOnTheExample) {
  const CliRun run = Cli({"solve-sum", Fixture("example.json")});
  EXPECT_EQ(run.code, kExitOk) << run.err;
  EXPECT_TRUE(Contains(run.out, "value: 10 (10)")) << run.out;
  EXPECT_TRUE(Contains(run.out, "C 1: 5 (5)"));
  EXPECT_TRUE(Contains(run.out, "C 2: 5 (5)"));
}

TEST_F(CliTest, SolveSumOrders) {
  EXPECT_EQ(Cli({"solve-sum", Fixture("example.json"), "--order", "brute"}).code, kExitOk);
  const CliRun ids = Cli({"solve-sum", Fixture("example.json"), "--order", "2,1"});
  EXPECT_EQ(ids.code, kExitOk);
  EXPECT_TRUE(Contains(ids.out, "order: 2 1"));
  EXPECT_EQ(Cli({"solve-sum", Fixture("example.json"), "--order", "2,3"}).code,
            kExitInputError);
  EXPECT_EQ(Cli({"solve-sum", Fixture("example.json"), "--order", "brute",
                 "--brute-cap", "1"})
                .code,
            kExitInputError);
}

TEST_F(CliTest, SolveSumRefusesMixedRatesWithSpt) {
  const CliRun run = Cli({"solve-sum", Fixture("mixed.json")});
  EXPECT_EQ(run.code, kExitInputError);
  EXPECT_FALSE(run.err.empty());
  EXPECT_EQ(Cli({"solve-sum", Fixture("mixed.json"), "--order", "brute"}).code, kExitOk);
}

TEST_F(CliTest, SolveSumWritesArtifacts) {
  const CliRun run = Cli({"solve-sum", Fixture("example.json"), "--out", Temp("s.json"),
                       "--csv", Temp("t.csv"), "--svg", Temp("t.svg"), "--lp",
                       Temp("m.lp")});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  const CliRun verify = Cli({"verify", Fixture("example.json"), Temp("s.json")});
  EXPECT_EQ(verify.code, kExitOk);
  EXPECT_TRUE(Contains(verify.out, "sum: 10 (10)")) << verify.out;
  EXPECT_TRUE(Contains(ReadTextFile(Temp("t.csv")), "time,load_1,temp_1,load_2,temp_2"));
  EXPECT_TRUE(Contains(ReadTextFile(Temp("t.svg")), "<svg"));
  EXPECT_TRUE(Contains(ReadTextFile(Temp("m.lp")), "Subject To"));
}

TEST_F(CliTest, SolveMakespan) {
  const CliRun run = Cli({"solve-makespan", Fixture("example.json"), "--check-lp"});
  EXPECT_EQ(run.code, kExitOk) << run.err;
  EXPECT_TRUE(Contains(run.out, "q 1: 5 (5)"));
  EXPECT_TRUE(Contains(run.out, "load bound: 4 (4)"));
  EXPECT_TRUE(Contains(run.out, "value: 5 (5)"));
  EXPECT_TRUE(Contains(run.out, "lp minimum over orders: 5 (5)"));
  EXPECT_EQ(Cli({"solve-makespan", Fixture("mixed.json"), "--check-lp"}).code, kExitOk);
  EXPECT_EQ(Cli({"solve-makespan", Fixture("empty.json")}).code, kExitOk);
}

TEST_F(CliTest, VerifyNaiveSchedule) {
  const CliRun run = Cli({"verify", Fixture("example.json"), Fixture("naive_natural.json")});
  EXPECT_EQ(run.code, kExitOk) << run.err;
  EXPECT_TRUE(Contains(run.out, "feasible: yes"));
  EXPECT_TRUE(Contains(run.out, "sum: 11 (11)"));
  EXPECT_TRUE(Contains(run.out, "makespan: 6 (6)"));
}

TEST_F(CliTest, VerifyOverheatingScheduleExitsOne) {
  const CliRun run = Cli({"verify", Fixture("single.json"), Fixture("single_overheat.json")});
  EXPECT_EQ(run.code, kExitInfeasible);
  EXPECT_TRUE(Contains(run.out, "violation: overheat job a at t=1")) << run.out;
  const CliRun sim = Cli({"simulate", Fixture("single.json"), Fixture("single_overheat.json")});
  EXPECT_EQ(sim.code, kExitInfeasible);
  EXPECT_TRUE(Contains(sim.out, "t=2 T_a=2"));
}

TEST_F(CliTest, VerifyNormalOptimum) {
  const CliRun run = Cli({"verify", Fixture("example.json"), Fixture("optimum_normal.json"),
                       "--csv", Temp("v.csv")});
  EXPECT_EQ(run.code, kExitOk) << run.err;
  EXPECT_TRUE(Contains(run.out, "sum: 10 (10)"));
  EXPECT_TRUE(std::filesystem::exists(Temp("v.csv")));
}

TEST_F(CliTest, InputErrorsExitTwo) {
  EXPECT_EQ(Cli({"solve-sum", Fixture("malformed.json")}).code, kExitInputError);
  EXPECT_EQ(Cli({"solve-sum", Fixture("bad_rates.json")}).code, kExitInputError);
  EXPECT_EQ(Cli({"solve-sum", Fixture("missing.json")}).code, kExitInputError);
  EXPECT_EQ(Cli({"verify", Fixture("example.json"), Fixture("bad_schedule.json")}).code,
            kExitInputError);
  EXPECT_EQ(Cli({"verify", Fixture("example.json"), Fixture("malformed.json")}).code,
            kExitInputError);
  EXPECT_EQ(Cli({}).code, kExitInputError);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitInputError);
  EXPECT_EQ(Cli({"solve-sum"}).code, kExitInputError);
  EXPECT_EQ(Cli({"solve-sum", Fixture("example.json"), "--out",
                 "/nonexistent-dir/x/out.json"})
                .code,
            kExitInputError);
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
}

TEST_F(CliTest, Discretize) {
  const CliRun run = Cli({"discretize", Fixture("example.json"), Fixture("optimum_normal.json"),
                       "--gamma", "101/100", "--auto", "--out", Temp("n.json")});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  EXPECT_TRUE(Contains(run.out, "feasible: yes"));
  const CliRun verify = Cli({"verify", Fixture("example.json"), Temp("n.json")});
  EXPECT_EQ(verify.code, kExitOk) << verify.out;

  const CliRun fixed = Cli({"discretize", Fixture("example.json"),
                         Fixture("optimum_normal.json"), "--gamma", "2", "--k", "1"});
  EXPECT_EQ(fixed.code, kExitOk);
  EXPECT_TRUE(Contains(fixed.out, "k: 1"));
  EXPECT_EQ(Cli({"discretize", Fixture("example.json"), Fixture("optimum_normal.json"),
                 "--gamma", "1", "--auto"})
                .code,
            kExitInputError);
  EXPECT_EQ(Cli({"discretize", Fixture("example.json"), Fixture("naive_natural.json"),
                 "--gamma", "2", "--k", "4"})
                .code,
            kExitInputError);
}

TEST_F(CliTest, RandomInstanceRoundTrips) {
  const CliRun run = Cli({"random", "--seed", "5", "--jobs", "4", "--mixed-rates"});
  ASSERT_EQ(run.code, kExitOk);
  EXPECT_EQ(ParseInstance(run.out).jobs.size(), 4u);
  EXPECT_EQ(Cli({"random", "--seed", "5", "--jobs", "4", "--mixed-rates"}).out, run.out);
  ASSERT_EQ(Cli({"random", "--seed", "9", "--out", Temp("r.json")}).code, kExitOk);
  EXPECT_EQ(Cli({"solve-sum", Temp("r.json")}).code, kExitOk);
  EXPECT_EQ(Cli({"random", "--jobs", "0"}).code, kExitInputError);
}

}  // namespace
}  // namespace tempsched
