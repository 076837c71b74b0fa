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

#include "tempsched/order_lp.h"

#include <map>

#include "gtest/gtest.h"
#include "tempsched/dynamics.h"
#include "tempsched/random_instance.h"
#include "tempsched/solvers.h"
#include "test_util.h"

namespace tempsched {
namespace {

using testing::RandomOrder;
using testing::TwoJobExample;

const LinearConstraint& Find(const LpProblem& lp, const std::string& name) {
  for (const auto& c : lp.constraints()) {
    if (c.name == name) return c;
  }
  ADD_FAILURE() << "missing constraint " << name;
  return lp.constraints().front();
}

std::map<std::string, Rational> Coefficients(const LpProblem& lp,
                                             const LinearConstraint& c) {
  std::map<std::string, Rational> out;
  for (const auto& t : c.lhs.terms) out[lp.variable_names()[t.var]] += t.coef;
  return out;
}

TEST(BuildOrderLpTest, TwoJobExampleRows) {
  const std::vector<int> order = {0, 1};
  const OrderLp lp = BuildOrderLp(TwoJobExample(), order,
                                  Objective::kSumOfCompletionTimes);
  const LpProblem& p = lp.problem;
  EXPECT_EQ(p.num_variables(), 2 + 4 + 4);

  using Coefs = std::map<std::string, Rational>;
  const Rational third = MakeRational(1, 3);
  const Rational four_thirds = MakeRational(4, 3);
  EXPECT_EQ(Coefficients(p, Find(p, "heat_1_2")),
            (Coefs{{"C_1", -third}, {"W_1_2", four_thirds}, {"T_1_2", -1}}));
  EXPECT_EQ(Coefficients(p, Find(p, "heat_2_1")),
            (Coefs{{"C_2", -third}, {"C_1", third}, {"W_2_1", four_thirds},
                   {"W_1_1", -four_thirds}, {"T_2_1", -1}, {"T_1_1", 1}}));
  EXPECT_EQ(Coefficients(p, Find(p, "load_1")),
            (Coefs{{"W_1_1", 1}, {"W_1_2", 1}, {"C_1", -1}}));
  for (const char* name : {"done_1_1", "done_2_1", "done_2_2"}) {
    const auto& c = Find(p, name);
    EXPECT_EQ(c.relation, Relation::kEqual);
    EXPECT_EQ(c.rhs, 2);
  }
  EXPECT_EQ(Find(p, "temp_2_2").rhs, 1);
  EXPECT_EQ(Coefficients(p, {"obj", p.objective(), Relation::kEqual, 0}),
            (Coefs{{"C_1", 1}, {"C_2", 1}}));
}

// Counted row family by row family: monotone work n(n-1), completion pins
// n(n+1)/2, machine load n, per-job rate n^2 (m > 1), ordering n-1,
// temperature recursion n^2, temperature cap n^2.
int ExpectedRows(int n, int m) {
  int rows = 0;
  for (int i = 2; i <= n; ++i) rows += n;
  for (int j = 1; j <= n; ++j) rows += n - j + 1;
  rows += n;
  if (m > 1) rows += n * n;
  rows += n - 1;
  rows += 2 * n * n;
  return rows;
}

TEST(BuildOrderLpTest, ConstraintCountMatchesFormula) {
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 6; ++n) {
    for (int m = 1; m <= 3; ++m) {
      const Instance instance = RandomInstance(rng, {n, m});
      const OrderLp lp = BuildOrderLp(instance, RandomOrder(rng, n),
                                      Objective::kSumOfCompletionTimes);
      EXPECT_EQ(lp.problem.num_constraints(), ExpectedRows(n, m)) << n << " " << m;
      EXPECT_EQ(OrderLpConstraintCount(n, m), ExpectedRows(n, m));
      EXPECT_EQ(lp.problem.num_variables(), n + 2 * n * n);
    }
  }
}

TEST(BuildOrderLpTest, RejectsBadInput) {
  EXPECT_THROW(BuildOrderLp(Instance{}, std::vector<int>{},
                            Objective::kSumOfCompletionTimes),
               InputError);
  EXPECT_THROW(BuildOrderLp(TwoJobExample(), std::vector<int>{0, 0},
                            Objective::kSumOfCompletionTimes),
               InputError);
  EXPECT_THROW(BuildOrderLp(TwoJobExample(), std::vector<int>{0},
                            Objective::kSumOfCompletionTimes),
               InputError);
}

TEST(SolveOrderLpTest, TwoJobExampleOptimum) {
  const Instance instance = TwoJobExample();
  const OrderLp lp =
      BuildOrderLp(instance, std::vector<int>{0, 1}, Objective::kSumOfCompletionTimes);
  const LpSolution s = SolveLp(lp.problem);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.value, 10);
  EXPECT_EQ(s.assignment[lp.completion_var[0]], 5);
  EXPECT_EQ(s.assignment[lp.completion_var[1]], 5);
  EXPECT_TRUE(lp.problem.Violations(s.assignment).empty());

  const NormalSchedule schedule = ExtractSchedule(lp, s);
  const LoadProfile loads = LoadsFromNormal(schedule);
  ASSERT_EQ(loads.size(), 1u);
  EXPECT_EQ(loads[0].end, 5);
  EXPECT_EQ(loads[0].loads, (std::vector<Rational>{MakeRational(2, 5),
                                                   MakeRational(2, 5)}));
  EXPECT_TRUE(CheckFeasibility(instance, schedule).feasible);
}

TEST(SolveOrderLpTest, SingleCoolJobRunsAtFullRate) {
  const Instance instance = testing::SingleJob(1, -1, MakeRational(1, 2));
  const SumResult result = SolveForOrder(instance, std::vector<int>{0});
  EXPECT_EQ(result.value, 1);
  const LoadProfile loads = LoadsFromNormal(result.schedule);
  ASSERT_EQ(loads.size(), 1u);
  EXPECT_EQ(loads[0].end, 1);
  EXPECT_EQ(loads[0].loads[0], 1);
}

TEST(ExtractScheduleTest, RequiresOptimalSolution) {
  const OrderLp lp = BuildOrderLp(TwoJobExample(), std::vector<int>{0, 1},
                                  Objective::kSumOfCompletionTimes);
  LpSolution infeasible;
  infeasible.status = LpStatus::kInfeasible;
  EXPECT_THROW(ExtractSchedule(lp, infeasible), ScheduleError);
}

// (C, W, T-hat) read off a schedule's simulation, packed for the order LP.
std::vector<Rational> SimulatedAssignment(const Instance& instance, const OrderLp& lp,
                                          const NormalSchedule& s) {
  const Trajectory tr = Simulate(instance, s);
  const int n = instance.size();
  RationalMatrix work(n, std::vector<Rational>(n));
  RationalMatrix temp(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rational& t = s.completion[i];
      work[i][j] = tr.times.empty() ? Rational(0) : tr.WorkAt(j, t);
      temp[i][j] = tr.times.empty() ? Rational(0) : tr.TemperatureAt(j, t);
    }
  }
  return PackAssignment(lp, s.completion, work, temp);
}

// Both directions of the LP characterization on random instances: the
// simulated profile satisfies the rows, and the LP's own T bounds it.
TEST(OrderLpPropertyTest, ExtractedSchedulesSatisfyRowsWithSimulatedTemperatures) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 3;
    const Instance instance =
        RandomInstance(rng, {n, 1 + trial % 3, /*job_dependent_rates=*/trial % 4 == 3});
    const std::vector<int> order = RandomOrder(rng, n);
    const OrderLp lp = BuildOrderLp(instance, order, Objective::kSumOfCompletionTimes);
    const LpSolution solution = SolveLp(lp.problem);
    ASSERT_EQ(solution.status, LpStatus::kOptimal);
    ASSERT_TRUE(lp.problem.Violations(solution.assignment).empty());
    const NormalSchedule s = ExtractSchedule(lp, solution);

    const FeasibilityReport report = CheckFeasibility(instance, s);
    EXPECT_TRUE(report.feasible) << "trial " << trial;
    ASSERT_TRUE(report.AllCompleted());
    for (int i = 0; i < n; ++i) {
      EXPECT_LE(*report.completions[s.order[i]], s.completion[i]);
    }

    const auto x = SimulatedAssignment(instance, lp, s);
    EXPECT_TRUE(lp.problem.Violations(x).empty()) << "trial " << trial;
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        EXPECT_LE(x[lp.temperature_var[i][k]], solution.assignment[lp.temperature_var[i][k]]);
      }
    }
  }
}

TEST(OrderLpPropertyTest, OverheatedScheduleViolatesRowsAndAdmitsNoWitness) {
  const Instance instance = TwoJobExample();
  NormalSchedule s{{0, 1}, {4, 4}, {{2, 2}, {2, 2}}, std::nullopt};
  const FeasibilityReport report = CheckFeasibility(instance, s);
  ASSERT_FALSE(report.feasible);
  EXPECT_EQ(report.violations.front().kind, ViolationKind::kOverheat);

  OrderLp lp = BuildOrderLp(instance, s.order, Objective::kSumOfCompletionTimes);
  const auto x = SimulatedAssignment(instance, lp, s);
  EXPECT_EQ(x[lp.temperature_var[0][0]], MakeRational(4, 3));
  EXPECT_FALSE(lp.problem.Violations(x).empty());

  for (int i = 0; i < 2; ++i) {
    lp.problem.AddConstraint("fix_C", LinearForm().Add(lp.completion_var[i], 1),
                             Relation::kEqual, s.completion[i]);
    for (int k = 0; k < 2; ++k) {
      lp.problem.AddConstraint("fix_W", LinearForm().Add(lp.work_var[i][k], 1),
                               Relation::kEqual, s.work[i][s.order[k]]);
    }
  }
  EXPECT_EQ(SolveLp(lp.problem).status, LpStatus::kInfeasible);
}

TEST(OrderLpPropertyTest, IdenticalJobsGiveOrderIndependentValues) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    Instance instance = RandomInstance(rng, {3, 1 + trial % 2});
    instance.jobs[2].p = instance.jobs[0].p;
    const Rational a = SolveForOrder(instance, std::vector<int>{0, 1, 2}).value;
    const Rational b = SolveForOrder(instance, std::vector<int>{2, 1, 0}).value;
    EXPECT_EQ(a, b);
  }
}

TEST(OrderLpPropertyTest, SingleMachineValueRespectsLowerBounds) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const Instance instance = RandomInstance(rng, {2 + trial % 3, 1});
    const Rational value =
        SolveForOrder(instance, RandomOrder(rng, instance.size())).value;
    Rational total = 0;
    for (const Job& job : instance.jobs) {
      total += job.p;
      EXPECT_GE(value, MinMakespanSingle(job));
    }
    EXPECT_GE(value, total);
  }
}

TEST(OrderLpPropertyTest, ScalingTimeScalesTheOptimum) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Instance instance = RandomInstance(rng, {2 + trial % 3, 1 + trial % 2});
    const Rational lambda = MakeRational(trial % 5 + 2, trial % 3 + 1);
    Instance scaled = instance;
    for (Job& job : scaled.jobs) {
      job.p *= lambda;
      job.alpha /= lambda;
      job.beta /= lambda;
    }
    const std::vector<int> order = RandomOrder(rng, instance.size());
    EXPECT_EQ(SolveForOrder(scaled, order).value,
              lambda * SolveForOrder(instance, order).value);
  }
}

}  // namespace
}  // namespace tempsched
