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

#include "tempsched/schedule.h"

#include <algorithm>
#include <map>
#include <string>

namespace tempsched {

void ValidateNormalSchedule(const Instance& instance, const NormalSchedule& s) {
  const int n = instance.size();
  if (s.size() != n || static_cast<int>(s.completion.size()) != n ||
      static_cast<int>(s.work.size()) != n) {
    throw ScheduleError("normal schedule must have one row per job");
  }
  std::vector<int> position(n, -1);
  for (int i = 0; i < n; ++i) {
    const int j = s.order[i];
    if (j < 0 || j >= n || position[j] != -1) {
      throw ScheduleError("completion order is not a permutation of the jobs");
    }
    position[j] = i;
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(s.work[i].size()) != n) {
      throw ScheduleError("work matrix must be n x n");
    }
    const Rational& previous = i == 0 ? Rational(0) : s.completion[i - 1];
    if (s.completion[i] < previous) {
      throw ScheduleError("completion times must be nondecreasing from 0");
    }
    for (int j = 0; j < n; ++j) {
      const Rational& w = s.work[i][j];
      const Rational& w_prev = i == 0 ? Rational(0) : s.work[i - 1][j];
      if (w < w_prev) {
        throw ScheduleError("work on job '" + instance.jobs[j].id +
                            "' decreases at row " + std::to_string(i + 1));
      }
      if (w > instance.jobs[j].p) {
        throw ScheduleError("work on job '" + instance.jobs[j].id +
                            "' exceeds its processing time");
      }
      if (i >= position[j] && w != instance.jobs[j].p) {
        throw ScheduleError("job '" + instance.jobs[j].id +
                            "' is not complete at its completion row");
      }
    }
  }
  if (s.temperature_witness) {
    if (static_cast<int>(s.temperature_witness->size()) != n) {
      throw ScheduleError("temperature witness must be n x n");
    }
    for (const auto& row : *s.temperature_witness) {
      if (static_cast<int>(row.size()) != n) {
        throw ScheduleError("temperature witness must be n x n");
      }
    }
  }
}

LoadProfile LoadsFromNormal(const NormalSchedule& s) {
  LoadProfile profile;
  Rational start = 0;
  const std::size_t jobs = s.work.empty() ? 0 : s.work.front().size();
  std::vector<Rational> previous_work(jobs, Rational(0));
  for (std::size_t i = 0; i < s.completion.size(); ++i) {
    const Rational& end = s.completion[i];
    const Rational length = end - start;
    if (length < 0) throw ScheduleError("completion times must be sorted");
    if (s.work[i].size() != jobs) throw ScheduleError("ragged work matrix");
    std::vector<Rational> loads(jobs);
    for (std::size_t j = 0; j < jobs; ++j) {
      const Rational delta = s.work[i][j] - previous_work[j];
      if (delta < 0) throw ScheduleError("work must be nondecreasing");
      if (length == 0 && delta != 0) {
        throw ScheduleError("zero-length interval ending at " + ToString(end) +
                            " carries work");
      }
      if (length != 0) loads[j] = delta / length;
      previous_work[j] = s.work[i][j];
    }
    if (length != 0) profile.push_back({start, end, std::move(loads)});
    start = end;
  }
  return profile;
}

NaturalSchedule NaturalFromIntervals(std::vector<std::vector<Interval>> raw,
                                     int machines) {
  if (machines < 1) throw InputError("machine count must be at least 1");
  NaturalSchedule out;
  out.machines = machines;
  out.intervals.resize(raw.size());
  for (std::size_t j = 0; j < raw.size(); ++j) {
    auto& list = raw[j];
    for (const Interval& iv : list) {
      if (iv.start < 0 || iv.start >= iv.end) {
        throw ScheduleError("interval [" + ToString(iv.start) + ", " +
                            ToString(iv.end) + ") is empty or negative");
      }
    }
    std::sort(list.begin(), list.end(), [](const Interval& a, const Interval& b) {
      return a.start < b.start;
    });
    auto& merged = out.intervals[j];
    for (const Interval& iv : list) {
      if (!merged.empty() && iv.start < merged.back().end) {
        throw ScheduleError("job " + std::to_string(j + 1) +
                            " has overlapping intervals at t=" +
                            ToString(iv.start));
      }
      if (!merged.empty() && iv.start == merged.back().end) {
        merged.back().end = iv.end;
      } else {
        merged.push_back(iv);
      }
    }
  }
  // Sweep endpoints; at equal times ends are processed before starts.
  std::map<Rational, int> delta;
  for (const auto& list : out.intervals) {
    for (const Interval& iv : list) {
      ++delta[iv.start];
      --delta[iv.end];
    }
  }
  int running = 0;
  for (const auto& [time, change] : delta) {
    running += change;
    if (running > machines) {
      throw ScheduleError("manageability violated at t=" + ToString(time) +
                          ": " + std::to_string(running) +
                          " jobs loaded on " + std::to_string(machines) +
                          " machine(s)");
    }
  }
  return out;
}

LoadProfile LoadsFromNatural(const NaturalSchedule& s) {
  std::vector<Rational> times;
  for (const auto& list : s.intervals) {
    for (const Interval& iv : list) {
      times.push_back(iv.start);
      times.push_back(iv.end);
    }
  }
  LoadProfile profile;
  if (times.empty()) return profile;
  times.push_back(0);
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());

  const std::size_t jobs = s.intervals.size();
  std::vector<std::size_t> cursor(jobs, 0);
  profile.reserve(times.size() - 1);
  for (std::size_t k = 0; k + 1 < times.size(); ++k) {
    LoadSegment segment{times[k], times[k + 1], std::vector<Rational>(jobs)};
    for (std::size_t j = 0; j < jobs; ++j) {
      const auto& list = s.intervals[j];
      while (cursor[j] < list.size() && list[cursor[j]].end <= times[k]) {
        ++cursor[j];
      }
      if (cursor[j] < list.size() && list[cursor[j]].start <= times[k]) {
        segment.loads[j] = 1;
      }
    }
    profile.push_back(std::move(segment));
  }
  return profile;
}

RationalMatrix WorkAtSegmentEnds(const LoadProfile& profile, int jobs) {
  RationalMatrix out;
  std::vector<Rational> work(jobs, Rational(0));
  for (const LoadSegment& segment : profile) {
    const Rational length = segment.end - segment.start;
    for (int j = 0; j < jobs; ++j) work[j] += segment.loads[j] * length;
    out.push_back(work);
  }
  return out;
}

}  // namespace tempsched
