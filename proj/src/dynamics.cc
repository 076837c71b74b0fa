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

#include "tempsched/dynamics.h"

#include <algorithm>

namespace tempsched {
namespace {

// Index k of the segment [times[k], times[k+1]) containing t (the last
// segment for t == end).
int SegmentIndex(const Trajectory& tr, const Rational& t) {
  if (tr.times.empty() || t < 0 || t > tr.times.back()) {
    throw InputError("time " + ToString(t) + " outside trajectory");
  }
  if (tr.segments() == 0) return -1;
  auto it = std::upper_bound(tr.times.begin(), tr.times.end(), t);
  int k = static_cast<int>(it - tr.times.begin()) - 1;
  return std::min(k, tr.segments() - 1);
}

Rational Interpolate(const Trajectory& tr, const RationalMatrix& values,
                     int job, const Rational& t) {
  const int k = SegmentIndex(tr, t);
  if (k < 0) return values[job][0];
  const Rational& t0 = tr.times[k];
  const Rational& t1 = tr.times[k + 1];
  const Rational& v0 = values[job][k];
  const Rational& v1 = values[job][k + 1];
  return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
}

}  // namespace

Rational Trajectory::TemperatureAt(int job, const Rational& t) const {
  return Interpolate(*this, temperature, job, t);
}

Rational Trajectory::WorkAt(int job, const Rational& t) const {
  return Interpolate(*this, work, job, t);
}

Trajectory Simulate(const Instance& instance, const LoadProfile& profile) {
  const int n = instance.size();
  Trajectory tr;
  tr.temperature.assign(n, {});
  tr.work.assign(n, {});
  tr.load.assign(n, {});
  if (profile.empty()) return tr;

  std::vector<Rational> temp(n, Rational(0));
  std::vector<Rational> work(n, Rational(0));
  std::vector<Rational> slope(n);
  const auto record = [&](const Rational& t) {
    tr.times.push_back(t);
    for (int j = 0; j < n; ++j) {
      tr.temperature[j].push_back(temp[j]);
      tr.work[j].push_back(work[j]);
    }
  };
  record(profile.front().start);

  std::vector<Rational> cuts;
  for (const LoadSegment& segment : profile) {
    if (static_cast<int>(segment.loads.size()) != n) {
      throw ScheduleError("load profile does not match the job count");
    }
    if (segment.start != tr.times.back() || segment.end <= segment.start) {
      throw ScheduleError("load profile segments must be contiguous");
    }
    cuts.clear();
    for (int j = 0; j < n; ++j) {
      const Job& job = instance.jobs[j];
      slope[j] = job.alpha + (job.beta - job.alpha) * segment.loads[j];
      if (slope[j] < 0 && temp[j] > 0) {
        Rational hit = segment.start - temp[j] / slope[j];
        if (hit < segment.end) cuts.push_back(std::move(hit));
      }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    cuts.push_back(segment.end);

    Rational now = segment.start;
    for (const Rational& cut : cuts) {
      const Rational dt = cut - now;
      for (int j = 0; j < n; ++j) {
        if (temp[j] > 0 || slope[j] > 0) {
          temp[j] += slope[j] * dt;
          if (temp[j] < 0) temp[j] = 0;
        }
        work[j] += segment.loads[j] * dt;
        tr.load[j].push_back(segment.loads[j]);
      }
      record(cut);
      now = cut;
    }
  }
  return tr;
}

Trajectory Simulate(const Instance& instance, const NormalSchedule& schedule) {
  ValidateNormalSchedule(instance, schedule);
  return Simulate(instance, LoadsFromNormal(schedule));
}

Trajectory Simulate(const Instance& instance,
                    const NaturalSchedule& schedule) {
  if (static_cast<int>(schedule.intervals.size()) != instance.size()) {
    throw ScheduleError("natural schedule does not match the job count");
  }
  return Simulate(instance, LoadsFromNatural(schedule));
}

const char* ToString(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kOverheat:
      return "overheat";
    case ViolationKind::kManageability:
      return "manageability";
    case ViolationKind::kJobRate:
      return "per-job-rate";
  }
  return "unknown";
}

bool FeasibilityReport::AllCompleted() const {
  return std::all_of(completions.begin(), completions.end(),
                     [](const auto& c) { return c.has_value(); });
}

FeasibilityReport CheckFeasibility(const Instance& instance,
                                   const Trajectory& tr) {
  const int n = instance.size();
  FeasibilityReport report;
  report.completions.assign(n, std::nullopt);

  for (int k = 0; k < tr.segments(); ++k) {
    Rational total = 0;
    for (int j = 0; j < n; ++j) {
      total += tr.load[j][k];
      if (tr.load[j][k] > 1) {
        report.violations.push_back(
            {instance.jobs[j].id, tr.times[k], ViolationKind::kJobRate});
      }
    }
    if (total > instance.machines) {
      report.violations.push_back({"", tr.times[k], ViolationKind::kManageability});
    }
  }

  for (int j = 0; j < n; ++j) {
    const auto& temp = tr.temperature[j];
    for (int k = 0; k < tr.segments(); ++k) {
      if (temp[k + 1] > 1 && temp[k] <= 1) {
        const Rational crossing = tr.times[k] + (1 - temp[k]) *
                                                    (tr.times[k + 1] - tr.times[k]) /
                                                    (temp[k + 1] - temp[k]);
        report.violations.push_back(
            {instance.jobs[j].id, crossing, ViolationKind::kOverheat});
      }
    }
    const Rational& p = instance.jobs[j].p;
    const auto& work = tr.work[j];
    for (int k = 0; k < tr.segments(); ++k) {
      if (work[k + 1] >= p) {
        report.completions[j] = tr.times[k] + (p - work[k]) / tr.load[j][k];
        break;
      }
    }
  }

  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [](const Violation& a, const Violation& b) {
                     return a.time < b.time;
                   });
  report.feasible = report.violations.empty();
  for (const auto& c : report.completions) {
    if (!c) continue;
    report.objective_sum += *c;
    if (*c > report.makespan) report.makespan = *c;
  }
  return report;
}

FeasibilityReport CheckFeasibility(const Instance& instance,
                                   const NormalSchedule& schedule) {
  return CheckFeasibility(instance, Simulate(instance, schedule));
}

FeasibilityReport CheckFeasibility(const Instance& instance,
                                   const NaturalSchedule& schedule) {
  return CheckFeasibility(instance, Simulate(instance, schedule));
}

}  // namespace tempsched
