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

#include "tempsched/discretize.h"

#include <string>

#include "tempsched/dynamics.h"

namespace tempsched {

NormalSchedule GammaScale(const NormalSchedule& schedule, const Rational& gamma) {
  if (gamma <= 1) {
    throw InputError("gamma must be greater than 1, got " + ToString(gamma));
  }
  NormalSchedule out = schedule;
  for (Rational& c : out.completion) c *= gamma;
  out.temperature_witness.reset();
  return out;
}

NaturalSchedule TimeSlice(const NormalSchedule& schedule, int k) {
  if (k < 1) throw InputError("slice count must be positive");
  const int n = static_cast<int>(schedule.work.empty() ? 0 : schedule.work[0].size());
  std::vector<std::vector<Interval>> raw(n);
  for (const LoadSegment& segment : LoadsFromNormal(schedule)) {
    Rational total = 0;
    for (const Rational& w : segment.loads) total += w;
    if (total > 1) {
      throw ScheduleError("interval starting at " + ToString(segment.start) +
                          " has total load " + ToString(total) +
                          " > 1; gamma-scale it first");
    }
    const Rational slice = (segment.end - segment.start) / k;
    for (int s = 0; s < k; ++s) {
      Rational cursor = segment.start + slice * s;
      for (int j = 0; j < n; ++j) {
        if (segment.loads[j] == 0) continue;
        Rational next = cursor + segment.loads[j] * slice;
        raw[j].push_back({cursor, next});
        cursor = std::move(next);
      }
    }
  }
  return NaturalFromIntervals(std::move(raw), 1);
}

DiscretizeResult DiscretizeAuto(const Instance& instance,
                                const NormalSchedule& schedule,
                                const Rational& gamma, int max_k) {
  const FeasibilityReport input = CheckFeasibility(instance, schedule);
  if (!input.feasible || !input.AllCompleted()) {
    throw ScheduleError("input schedule must be feasible and complete every job");
  }
  DiscretizeResult result;
  result.scaled = GammaScale(schedule, gamma);
  for (long k = 1; k <= max_k; k *= 2) {
    NaturalSchedule sliced = TimeSlice(result.scaled, static_cast<int>(k));
    if (CheckFeasibility(instance, sliced).feasible) {
      result.schedule = std::move(sliced);
      result.k = static_cast<int>(k);
      return result;
    }
  }
  throw ScheduleError("no feasible slicing found with k <= " +
                      std::to_string(max_k) + "; try a larger gamma");
}

}  // namespace tempsched
