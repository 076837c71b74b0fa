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

#ifndef TEMPSCHED_SCHEDULE_H_
#define TEMPSCHED_SCHEDULE_H_

#include <optional>
#include <stdexcept>
#include <vector>

#include "tempsched/instance.h"
#include "tempsched/rational.h"

namespace tempsched {

// Raised when a schedule violates its structural invariants (as opposed to
// feasibility, which dynamics reports without throwing).
class ScheduleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using RationalMatrix = std::vector<std::vector<Rational>>;

// A schedule whose loads are constant between consecutive completion times.
//
// Row i refers to the i-th completion: `completion[i]` is the completion time
// of job `order[i]`, and `work[i][j]` is the cumulative work on job j (an
// index into Instance::jobs) at time completion[i]. The origin C_0 = 0 is
// implicit.
struct NormalSchedule {
  std::vector<int> order;
  std::vector<Rational> completion;
  RationalMatrix work;
  // Optional upper bounds on temperatures at the completion times, laid out
  // like `work`.
  std::optional<RationalMatrix> temperature_witness;

  int size() const { return static_cast<int>(order.size()); }
  bool operator==(const NormalSchedule&) const = default;
};

// Half-open [start, end).
struct Interval {
  Rational start;
  Rational end;
  bool operator==(const Interval&) const = default;
};

// Each job is either fully loaded or idle; `intervals[j]` lists the sorted,
// disjoint, non-touching processing intervals of job j.
struct NaturalSchedule {
  std::vector<std::vector<Interval>> intervals;
  int machines = 1;

  bool operator==(const NaturalSchedule&) const = default;
};

// Constant per-job loads on [start, end).
struct LoadSegment {
  Rational start;
  Rational end;
  std::vector<Rational> loads;
};

// Contiguous segments starting at 0. Empty for an empty schedule.
using LoadProfile = std::vector<LoadSegment>;

// Checks sizes, that `order` is a permutation, 0 <= C_1 <= ... <= C_n,
// nonnegative monotone work, and W[i][j] = p_j once job j's position is
// reached.
void ValidateNormalSchedule(const Instance& instance, const NormalSchedule& s);

// Per-interval loads (W[i][j] - W[i-1][j]) / (C_i - C_{i-1}). Zero-length
// intervals are skipped and must carry no work. Loads above 1 are returned as
// is so that feasibility checking can report them.
LoadProfile LoadsFromNormal(const NormalSchedule& s);

// Sorts and merges touching intervals per job, then checks that at most
// `machines` jobs run at any instant.
NaturalSchedule NaturalFromIntervals(std::vector<std::vector<Interval>> raw,
                                     int machines);

LoadProfile LoadsFromNatural(const NaturalSchedule& s);

// Cumulative work per job at each segment end, integrating the profile.
RationalMatrix WorkAtSegmentEnds(const LoadProfile& profile, int jobs);

}  // namespace tempsched

#endif  // TEMPSCHED_SCHEDULE_H_
