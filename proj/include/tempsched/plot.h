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

#ifndef TEMPSCHED_PLOT_H_
#define TEMPSCHED_PLOT_H_

#include <string>

#include "tempsched/dynamics.h"
#include "tempsched/instance.h"

namespace tempsched {

// One row per breakpoint: time, then load_<id> and temp_<id> per job. The
// load is the one in effect from that breakpoint on (0 at the last one).
// Decimal values with 12 significant digits.
std::string EmitCsv(const Instance& instance, const Trajectory& trajectory);

// Standalone SVG with one panel per job: gray load shading, red temperature
// line, dashed line at temperature 1.
std::string EmitSvg(const Instance& instance, const Trajectory& trajectory);

}  // namespace tempsched

#endif  // TEMPSCHED_PLOT_H_
