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

#include "tempsched/instance.h"

#include <set>

namespace tempsched {

void ValidateInstance(const Instance& instance) {
  if (instance.machines < 1) {
    throw InputError("machine count must be at least 1");
  }
  std::set<std::string> seen;
  for (const Job& job : instance.jobs) {
    const std::string who = "job '" + job.id + "': ";
    if (!seen.insert(job.id).second) throw InputError(who + "duplicate id");
    if (job.p <= 0) throw InputError(who + "processing time must be > 0");
    if (job.alpha >= 0) throw InputError(who + "alpha must be < 0");
    if (job.beta <= 0) throw InputError(who + "beta must be > 0");
    if (job.threshold && *job.threshold <= 0) {
      throw InputError(who + "threshold must be > 0");
    }
  }
}

Instance Normalize(const Instance& instance) {
  Instance out = instance;
  for (Job& job : out.jobs) {
    if (!job.threshold) continue;
    if (*job.threshold <= 0) {
      throw InputError("job '" + job.id + "': threshold must be > 0");
    }
    job.alpha /= *job.threshold;
    job.beta /= *job.threshold;
    job.threshold.reset();
  }
  return out;
}

bool HasCommonRates(const Instance& instance) {
  for (const Job& job : instance.jobs) {
    if (job.alpha != instance.jobs.front().alpha ||
        job.beta != instance.jobs.front().beta) {
      return false;
    }
  }
  return true;
}

int FindJob(const Instance& instance, const std::string& id) {
  for (int j = 0; j < instance.size(); ++j) {
    if (instance.jobs[j].id == id) return j;
  }
  return -1;
}

}  // namespace tempsched
