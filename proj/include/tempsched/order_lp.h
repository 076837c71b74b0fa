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

#ifndef TEMPSCHED_ORDER_LP_H_
#define TEMPSCHED_ORDER_LP_H_

#include <span>
#include <vector>

#include "tempsched/instance.h"
#include "tempsched/lp.h"
#include "tempsched/schedule.h"

namespace tempsched {

enum class Objective { kSumOfCompletionTimes, kMakespan };

// The LP over normal schedules that complete jobs in a fixed order. Positions
// are 0-based here; variable names are 1-based (C_i, W_i_j, T_i_j), where j
// is the job's position in the order, not its instance index.
struct OrderLp {
  LpProblem problem;
  std::vector<int> order;
  std::vector<int> completion_var;
  std::vector<std::vector<int>> work_var;
  std::vector<std::vector<int>> temperature_var;
};

// Emits, for positions i, j (job j being the j-th to complete):
//   W_{i-1,j} <= W_{i,j}                          (work is monotone)
//   W_{i,j} = p_j for i >= j                      (job j done by C_j)
//   sum_j (W_{i,j} - W_{i-1,j}) <= m (C_i - C_{i-1})
//   W_{i,j} - W_{i-1,j} <= C_i - C_{i-1}          (only when m > 1)
//   C_{i-1} <= C_i
//   a_j (C_i - C_{i-1}) + (b_j - a_j)(W_{i,j} - W_{i-1,j}) <= T_{i,j} - T_{i-1,j}
//   T_{i,j} <= 1
// with C_0 = W_0 = T_0 = 0. The instance must be normalized.
OrderLp BuildOrderLp(const Instance& instance, std::span<const int> order,
                     Objective objective);

// Number of rows BuildOrderLp emits for n jobs on m machines.
int OrderLpConstraintCount(int n, int machines);

// Maps an optimal LP solution back to a normal schedule (work columns in
// instance order, T kept as the temperature witness). Throws ScheduleError
// if the solution is not optimal.
NormalSchedule ExtractSchedule(const OrderLp& lp, const LpSolution& solution);

// Lays out (C, W, T) in the LP's variable order; C and the rows of W and T
// follow completion positions, W and T columns are instance job indices.
std::vector<Rational> PackAssignment(const OrderLp& lp,
                                     const std::vector<Rational>& completion,
                                     const RationalMatrix& work,
                                     const RationalMatrix& temperature);

}  // namespace tempsched

#endif  // TEMPSCHED_ORDER_LP_H_
