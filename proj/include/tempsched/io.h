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

#ifndef TEMPSCHED_IO_H_
#define TEMPSCHED_IO_H_

#include <iosfwd>
#include <string>
#include <variant>

#include "tempsched/instance.h"
#include "tempsched/schedule.h"

namespace tempsched {

// Instance files:
//   {"machines": 1, "alpha": "-1/3", "beta": 1,
//    "jobs": [{"id": "a", "p": 2, "alpha"?: .., "beta"?: .., "threshold"?: ..}]}
// Rationals may be JSON integers, decimal strings or "num/den" strings.
// Per-job rates override the global ones. The result is validated but not
// normalized.
Instance ParseInstance(const std::string& text);
Instance ReadInstanceFile(const std::string& path);
// Writes per-job rates; every rational as a "num/den" string.
std::string SerializeInstance(const Instance& instance);

using AnySchedule = std::variant<NormalSchedule, NaturalSchedule>;

// Schedule files:
//   {"kind": "normal", "order": [ids], "C": [...], "W": [[...], ...], "T"?: ..}
//     W and T rows follow the completion order, columns the instance's job
//     list.
//   {"kind": "natural", "intervals": {"id": [[start, end], ...], ...}}
// Natural schedules are merged and sorted but not checked for manageability;
// that is left to CheckFeasibility.
AnySchedule ParseSchedule(const std::string& text, const Instance& instance);
AnySchedule ReadScheduleFile(const std::string& path, const Instance& instance);
std::string SerializeSchedule(const NormalSchedule& s, const Instance& instance);
std::string SerializeSchedule(const NaturalSchedule& s, const Instance& instance);

std::string ReadTextFile(const std::string& path);
// Throws InputError when the file cannot be written.
void WriteTextFile(const std::string& path, const std::string& contents);

}  // namespace tempsched

#endif  // TEMPSCHED_IO_H_
