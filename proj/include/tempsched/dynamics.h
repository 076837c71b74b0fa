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

#ifndef TEMPSCHED_DYNAMICS_H_
#define TEMPSCHED_DYNAMICS_H_

#include <optional>
#include <string>
#include <vector>

#include "tempsched/instance.h"
#include "tempsched/rational.h"
#include "tempsched/schedule.h"

namespace tempsched {

// Exact piecewise-linear temperature and work functions. Between consecutive
// breakpoints every job has a constant load and a constant temperature slope;
// the instant a cooling job reaches 0 is always a breakpoint.
struct Trajectory {
  std::vector<Rational> times;
  // Indexed [job][breakpoint].
  RationalMatrix temperature;
  RationalMatrix work;
  // Indexed [job][segment]; segment k is [times[k], times[k+1]).
  RationalMatrix load;

  int jobs() const { return static_cast<int>(temperature.size()); }
  int segments() const {
    return times.empty() ? 0 : static_cast<int>(times.size()) - 1;
  }
  Rational end_time() const { return times.empty() ? Rational(0) : times.back(); }

  // Exact value by interpolation; t must lie in [0, end_time()].
  Rational TemperatureAt(int job, const Rational& t) const;
  Rational WorkAt(int job, const Rational& t) const;
};

// Integrates the temperature ODE over a load profile. Normalized rates are
// assumed (threshold 1).
Trajectory Simulate(const Instance& instance, const LoadProfile& profile);
Trajectory Simulate(const Instance& instance, const NormalSchedule& schedule);
Trajectory Simulate(const Instance& instance, const NaturalSchedule& schedule);

enum class ViolationKind { kOverheat, kManageability, kJobRate };

const char* ToString(ViolationKind kind);

struct Violation {
  // Empty for machine-level violations (manageability).
  std::string job_id;
  Rational time;
  ViolationKind kind;
};

struct FeasibilityReport {
  bool feasible = true;
  std::vector<Violation> violations;
  // Missing entries are jobs whose scheduled work never reaches p_j.
  std::vector<std::optional<Rational>> completions;
  // Both taken over completed jobs only.
  Rational objective_sum;
  Rational makespan;

  bool AllCompleted() const;
};

// Temperature exactly 1 is allowed; an overheat is reported at the instant
// the temperature starts to exceed 1. Manageability is sum of loads <= m per
// segment, and each job's load must not exceed 1.
FeasibilityReport CheckFeasibility(const Instance& instance,
                                   const Trajectory& trajectory);
FeasibilityReport CheckFeasibility(const Instance& instance,
                                   const NormalSchedule& schedule);
FeasibilityReport CheckFeasibility(const Instance& instance,
                                   const NaturalSchedule& schedule);

}  // namespace tempsched

#endif  // TEMPSCHED_DYNAMICS_H_
