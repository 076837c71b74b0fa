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

#include "tempsched/random_instance.h"

#include <string>

namespace tempsched {
namespace {

// Uniform k/d in (0, limit] with d <= max_den.
Rational SmallRational(std::mt19937_64& rng, int limit, int max_den) {
  std::uniform_int_distribution<int> den_dist(1, max_den);
  const int den = den_dist(rng);
  std::uniform_int_distribution<int> num_dist(1, limit * den);
  return MakeRational(num_dist(rng), den);
}

}  // namespace

Instance RandomInstance(std::mt19937_64& rng,
                        const RandomInstanceOptions& options) {
  Instance instance;
  instance.machines = options.machines;
  const int den = options.max_denominator;
  const Rational alpha = -SmallRational(rng, 2, den);
  const Rational beta = SmallRational(rng, 2, den);
  for (int j = 0; j < options.jobs; ++j) {
    Job job;
    job.id = "j" + std::to_string(j + 1);
    job.p = SmallRational(rng, 4, den);
    job.alpha = options.job_dependent_rates ? Rational(-SmallRational(rng, 2, den)) : alpha;
    job.beta = options.job_dependent_rates ? SmallRational(rng, 2, den) : beta;
    instance.jobs.push_back(std::move(job));
  }
  return instance;
}

}  // namespace tempsched
