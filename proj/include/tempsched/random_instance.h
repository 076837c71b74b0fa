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

#ifndef TEMPSCHED_RANDOM_INSTANCE_H_
#define TEMPSCHED_RANDOM_INSTANCE_H_

#include <cstdint>
#include <random>

#include "tempsched/instance.h"

namespace tempsched {

struct RandomInstanceOptions {
  int jobs = 3;
  int machines = 1;
  bool job_dependent_rates = false;
  // Every generated value is k / d with 1 <= d <= max_denominator.
  int max_denominator = 4;
};

// Small-denominator instance with p in (0, 4], alpha in [-2, 0), beta in
// (0, 2]. Already normalized. Job ids are "j1", "j2", ...
Instance RandomInstance(std::mt19937_64& rng, const RandomInstanceOptions& options);

}  // namespace tempsched

#endif  // TEMPSCHED_RANDOM_INSTANCE_H_
