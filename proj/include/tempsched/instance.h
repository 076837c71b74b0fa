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

#ifndef TEMPSCHED_INSTANCE_H_
#define TEMPSCHED_INSTANCE_H_

#include <optional>
#include <string>
#include <vector>

#include "tempsched/rational.h"

namespace tempsched {

// A job heats at rate `beta` while fully loaded and cools at rate `alpha`
// while idle. Temperatures live in [0, threshold]; after normalization the
// threshold is 1 and `threshold` is empty.
struct Job {
  std::string id;
  Rational p;
  Rational alpha;
  Rational beta;
  std::optional<Rational> threshold;

  bool operator==(const Job&) const = default;
};

struct Instance {
  std::vector<Job> jobs;
  int machines = 1;

  int size() const { return static_cast<int>(jobs.size()); }
  bool operator==(const Instance&) const = default;
};

// Checks p > 0, alpha < 0, beta > 0, threshold > 0, unique ids, machines >= 1.
// Throws InputError naming the first offending job.
void ValidateInstance(const Instance& instance);

// Divides each job's rates by its threshold and clears the threshold.
// Idempotent.
Instance Normalize(const Instance& instance);

// True when every job has the same (alpha, beta). Vacuously true for n <= 1.
bool HasCommonRates(const Instance& instance);

// Position of the job with this id, or -1.
int FindJob(const Instance& instance, const std::string& id);

}  // namespace tempsched

#endif  // TEMPSCHED_INSTANCE_H_
