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

#include "tempsched/solvers.h"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "tempsched/lp.h"

namespace tempsched {

SumResult SolveForOrder(const Instance& instance, std::span<const int> order,
                        Objective objective) {
  const OrderLp lp = BuildOrderLp(instance, order, objective);
  const LpSolution solution = SolveLp(lp.problem);
  SumResult result;
  result.schedule = ExtractSchedule(lp, solution);
  result.value = solution.value;
  result.order = lp.order;
  return result;
}

std::vector<int> SptOrder(const Instance& instance) {
  std::vector<int> order(instance.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return instance.jobs[a].p < instance.jobs[b].p;
  });
  return order;
}

SumResult SolveSum(const Instance& instance) {
  if (!HasCommonRates(instance)) {
    throw InputError(
        "SPT optimality is only established for common heating and cooling "
        "rates; use the brute-force solver for job-dependent rates");
  }
  return SolveForOrder(instance, SptOrder(instance));
}

SumResult SolveSumBruteForce(const Instance& instance, int cap,
                             Objective objective) {
  const int n = instance.size();
  if (n == 0) throw InputError("cannot solve an empty instance");
  if (n > cap) {
    throw InputError("brute force over " + std::to_string(n) +
                     " jobs exceeds the cap of " + std::to_string(cap));
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::optional<SumResult> best;
  // next_permutation walks orders lexicographically; keep the first minimum.
  do {
    SumResult candidate = SolveForOrder(instance, order, objective);
    if (!best || candidate.value < best->value) best = std::move(candidate);
  } while (std::next_permutation(order.begin(), order.end()));
  return std::move(*best);
}

Rational MinMakespanSingle(const Job& job) {
  if (job.beta * job.p <= 1) return job.p;
  return job.p * (1 - job.beta / job.alpha) + 1 / job.alpha;
}

MakespanResult SolveMakespan(const Instance& instance) {
  MakespanResult result;
  const int n = instance.size();
  if (n == 0) return result;
  Rational total = 0;
  for (const Job& job : instance.jobs) {
    total += job.p;
    result.value = std::max(result.value, MinMakespanSingle(job));
  }
  result.value = std::max(result.value, Rational(total / instance.machines));

  NormalSchedule& s = result.schedule;
  s.order.resize(n);
  std::iota(s.order.begin(), s.order.end(), 0);
  s.completion.assign(n, result.value);
  std::vector<Rational> done(n);
  for (int j = 0; j < n; ++j) done[j] = instance.jobs[j].p;
  s.work.assign(n, done);
  return result;
}

}  // namespace tempsched
