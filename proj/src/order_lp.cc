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

#include <string>

namespace tempsched {
namespace {

std::string Name(const char* prefix, int i) {
  return std::string(prefix) + "_" + std::to_string(i + 1);
}

std::string Name(const char* prefix, int i, int j) {
  return Name(prefix, i) + "_" + std::to_string(j + 1);
}

}  // namespace

OrderLp BuildOrderLp(const Instance& instance, std::span<const int> order,
                     Objective objective) {
  const int n = instance.size();
  if (n == 0) throw InputError("cannot build an LP for an empty instance");
  if (static_cast<int>(order.size()) != n) {
    throw InputError("order must list every job exactly once");
  }
  std::vector<bool> seen(n, false);
  for (int j : order) {
    if (j < 0 || j >= n || seen[j]) {
      throw InputError("order must list every job exactly once");
    }
    seen[j] = true;
  }

  OrderLp lp;
  lp.order.assign(order.begin(), order.end());
  LpProblem& problem = lp.problem;
  for (int i = 0; i < n; ++i) lp.completion_var.push_back(problem.AddVariable(Name("C", i)));
  lp.work_var.assign(n, std::vector<int>(n));
  lp.temperature_var.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) lp.work_var[i][j] = problem.AddVariable(Name("W", i, j));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      lp.temperature_var[i][j] = problem.AddVariable(Name("T", i, j));
    }
  }
  const auto& C = lp.completion_var;
  const auto& W = lp.work_var;
  const auto& T = lp.temperature_var;
  const Rational machines = instance.machines;

  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      problem.AddConstraint(Name("mono", i, j),
                            LinearForm().Add(W[i - 1][j], 1).Add(W[i][j], -1),
                            Relation::kLessEqual, 0);
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int i = j; i < n; ++i) {
      problem.AddConstraint(Name("done", i, j), LinearForm().Add(W[i][j], 1),
                            Relation::kEqual, instance.jobs[order[j]].p);
    }
  }
  for (int i = 0; i < n; ++i) {
    LinearForm form;
    for (int j = 0; j < n; ++j) {
      form.Add(W[i][j], 1);
      if (i > 0) form.Add(W[i - 1][j], -1);
    }
    form.Add(C[i], -machines);
    if (i > 0) form.Add(C[i - 1], machines);
    problem.AddConstraint(Name("load", i), std::move(form), Relation::kLessEqual, 0);
  }
  if (instance.machines > 1) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        LinearForm form;
        form.Add(W[i][j], 1).Add(C[i], -1);
        if (i > 0) form.Add(W[i - 1][j], -1).Add(C[i - 1], 1);
        problem.AddConstraint(Name("rate", i, j), std::move(form),
                              Relation::kLessEqual, 0);
      }
    }
  }
  for (int i = 1; i < n; ++i) {
    problem.AddConstraint(Name("order", i),
                          LinearForm().Add(C[i - 1], 1).Add(C[i], -1),
                          Relation::kLessEqual, 0);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Job& job = instance.jobs[order[j]];
      const Rational gain = job.beta - job.alpha;
      LinearForm form;
      form.Add(C[i], job.alpha).Add(W[i][j], gain).Add(T[i][j], -1);
      if (i > 0) {
        form.Add(C[i - 1], -job.alpha).Add(W[i - 1][j], -gain).Add(T[i - 1][j], 1);
      }
      problem.AddConstraint(Name("heat", i, j), std::move(form),
                            Relation::kLessEqual, 0);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      problem.AddConstraint(Name("temp", i, j), LinearForm().Add(T[i][j], 1),
                            Relation::kLessEqual, 1);
    }
  }

  LinearForm goal;
  if (objective == Objective::kSumOfCompletionTimes) {
    for (int i = 0; i < n; ++i) goal.Add(C[i], 1);
  } else {
    goal.Add(C[n - 1], 1);
  }
  problem.SetObjective(std::move(goal));
  return lp;
}

int OrderLpConstraintCount(int n, int machines) {
  const int rate_rows = machines > 1 ? n * n : 0;
  return n * (n - 1) + n * (n + 1) / 2 + n + rate_rows + (n - 1) + 2 * n * n;
}

NormalSchedule ExtractSchedule(const OrderLp& lp, const LpSolution& solution) {
  if (solution.status != LpStatus::kOptimal) {
    throw ScheduleError(std::string("no schedule: LP is ") +
                        ToString(solution.status));
  }
  const int n = static_cast<int>(lp.order.size());
  const auto& x = solution.assignment;
  NormalSchedule s;
  s.order = lp.order;
  s.work.assign(n, std::vector<Rational>(n));
  RationalMatrix witness(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) {
    s.completion.push_back(x[lp.completion_var[i]]);
    for (int k = 0; k < n; ++k) {
      s.work[i][lp.order[k]] = x[lp.work_var[i][k]];
      witness[i][lp.order[k]] = x[lp.temperature_var[i][k]];
    }
  }
  s.temperature_witness = std::move(witness);
  return s;
}

std::vector<Rational> PackAssignment(const OrderLp& lp,
                                     const std::vector<Rational>& completion,
                                     const RationalMatrix& work,
                                     const RationalMatrix& temperature) {
  const int n = static_cast<int>(lp.order.size());
  std::vector<Rational> x(lp.problem.num_variables());
  for (int i = 0; i < n; ++i) {
    x[lp.completion_var[i]] = completion[i];
    for (int k = 0; k < n; ++k) {
      x[lp.work_var[i][k]] = work[i][lp.order[k]];
      x[lp.temperature_var[i][k]] = temperature[i][lp.order[k]];
    }
  }
  return x;
}

}  // namespace tempsched
