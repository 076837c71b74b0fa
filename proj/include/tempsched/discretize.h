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

#ifndef TEMPSCHED_DISCRETIZE_H_
#define TEMPSCHED_DISCRETIZE_H_

#include "tempsched/instance.h"
#include "tempsched/rational.h"
#include "tempsched/schedule.h"

namespace tempsched {

inline constexpr int kDefaultMaxSlices = 1 << 20;

// Stretches time by gamma > 1 while keeping the work done per completion
// interval, so every load drops by the factor gamma. Drops any temperature
// witness (it no longer applies).
NormalSchedule GammaScale(const NormalSchedule& schedule, const Rational& gamma);

// Splits every completion interval into k equal slices. Each slice runs the
// jobs back to back in instance order, job j for load_j * slice_length, and
// idles for the rest. Requires total load <= 1 on every interval; the result
// is a single-machine natural schedule.
NaturalSchedule TimeSlice(const NormalSchedule& schedule, int k);

struct DiscretizeResult {
  NaturalSchedule schedule;
  int k = 0;
  NormalSchedule scaled;
};

// Gamma-scales a feasible schedule, then tries k = 1, 2, 4, ... until the
// sliced schedule simulates feasible. Throws ScheduleError if the input is
// infeasible or incomplete, or once k would exceed max_k.
DiscretizeResult DiscretizeAuto(const Instance& instance,
                                const NormalSchedule& schedule,
                                const Rational& gamma,
                                int max_k = kDefaultMaxSlices);

}  // namespace tempsched

#endif  // TEMPSCHED_DISCRETIZE_H_
