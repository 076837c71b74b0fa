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

#ifndef TEMPSCHED_SOLVERS_H_
#define TEMPSCHED_SOLVERS_H_

#include <span>
#include <vector>

#include "tempsched/instance.h"
#include "tempsched/order_lp.h"
#include "tempsched/rational.h"
#include "tempsched/schedule.h"

namespace tempsched {

inline constexpr int kDefaultBruteForceCap = 7;

struct SumResult {
  NormalSchedule schedule;
  Rational value;
  std::vector<int> order;
};

// Optimal sum of completion times over normal schedules that finish jobs in
// `order`, or over makespan when `objective` says so.
SumResult SolveForOrder(const Instance& instance, std::span<const int> order,
                        Objective objective = Objective::kSumOfCompletionTimes);

// Nondecreasing p, ties broken by input position.
std::vector<int> SptOrder(const Instance& instance);

// Minimum sum of completion times via the LP for the SPT completion order.
// Requires common (alpha, beta); throws InputError otherwise.
SumResult SolveSum(const Instance& instance);

// Minimum over all n! completion orders of the order LP. Among tied optima the
// lexicographically smallest order wins. Throws InputError when n > cap.
SumResult SolveSumBruteForce(
    const Instance& instance, int cap = kDefaultBruteForceCap,
    Objective objective = Objective::kSumOfCompletionTimes);

// Shortest makespan of `job` scheduled alone.
Rational MinMakespanSingle(const Job& job);

struct MakespanResult {
  Rational value;
  NormalSchedule schedule;
};

// max{max_j q_j, sum_j p_j / m}, with the schedule running every job at the
// constant rate p_j / value on [0, value). Per-job rates are allowed.
MakespanResult SolveMakespan(const Instance& instance);

}  // namespace tempsched

#endif  // TEMPSCHED_SOLVERS_H_
