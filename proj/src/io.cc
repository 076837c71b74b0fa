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

#include "tempsched/io.h"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "json.hpp"

namespace tempsched {
namespace {

using nlohmann::json;

Rational RationalFrom(const json& value, const std::string& what) {
  if (value.is_number_integer()) {
    return Rational(mpz_class(value.dump(), 10));
  }
  if (value.is_number_float()) return ParseRational(value.dump());
  if (value.is_string()) return ParseRational(value.get<std::string>());
  throw InputError(what + ": expected a rational, got " + value.dump());
}

json RationalTo(const Rational& value) { return ToString(value); }

const json& Require(const json& object, const char* key, const std::string& where) {
  if (!object.is_object() || !object.contains(key)) {
    throw InputError(where + ": missing \"" + key + "\"");
  }
  return object.at(key);
}

json ParseJson(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

json MatrixTo(const RationalMatrix& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const Rational& v : row) r.push_back(RationalTo(v));
    rows.push_back(std::move(r));
  }
  return rows;
}

RationalMatrix MatrixFrom(const json& value, int n, const std::string& what) {
  if (!value.is_array() || static_cast<int>(value.size()) != n) {
    throw InputError(what + ": expected " + std::to_string(n) + " rows");
  }
  RationalMatrix m;
  for (const json& row : value) {
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw InputError(what + ": expected " + std::to_string(n) + " columns");
    }
    std::vector<Rational> r;
    for (const json& v : row) r.push_back(RationalFrom(v, what));
    m.push_back(std::move(r));
  }
  return m;
}

int JobIndex(const Instance& instance, const json& id) {
  if (!id.is_string()) throw InputError("job id must be a string: " + id.dump());
  const int j = FindJob(instance, id.get<std::string>());
  if (j < 0) throw InputError("unknown job id '" + id.get<std::string>() + "'");
  return j;
}

}  // namespace

Instance ParseInstance(const std::string& text) {
  const json doc = ParseJson(text);
  if (!doc.is_object()) throw InputError("instance must be a JSON object");
  Instance instance;
  if (doc.contains("machines")) {
    const json& m = doc.at("machines");
    if (!m.is_number_integer()) throw InputError("machines must be an integer");
    instance.machines = m.get<int>();
  }
  std::optional<Rational> alpha, beta;
  if (doc.contains("alpha")) alpha = RationalFrom(doc.at("alpha"), "alpha");
  if (doc.contains("beta")) beta = RationalFrom(doc.at("beta"), "beta");
  const json& jobs = Require(doc, "jobs", "instance");
  if (!jobs.is_array()) throw InputError("jobs must be an array");
  for (const json& entry : jobs) {
    Job job;
    const json& id = Require(entry, "id", "job");
    if (!id.is_string()) throw InputError("job id must be a string");
    job.id = id.get<std::string>();
    const std::string where = "job '" + job.id + "'";
    job.p = RationalFrom(Require(entry, "p", where), where + " p");
    if (entry.contains("alpha")) {
      job.alpha = RationalFrom(entry.at("alpha"), where + " alpha");
    } else if (alpha) {
      job.alpha = *alpha;
    } else {
      throw InputError(where + ": no alpha given");
    }
    if (entry.contains("beta")) {
      job.beta = RationalFrom(entry.at("beta"), where + " beta");
    } else if (beta) {
      job.beta = *beta;
    } else {
      throw InputError(where + ": no beta given");
    }
    if (entry.contains("threshold")) {
      job.threshold = RationalFrom(entry.at("threshold"), where + " threshold");
    }
    instance.jobs.push_back(std::move(job));
  }
  ValidateInstance(instance);
  return instance;
}

Instance ReadInstanceFile(const std::string& path) {
  return ParseInstance(ReadTextFile(path));
}

std::string SerializeInstance(const Instance& instance) {
  json doc;
  doc["machines"] = instance.machines;
  doc["jobs"] = json::array();
  for (const Job& job : instance.jobs) {
    json entry = {{"id", job.id},
                  {"p", RationalTo(job.p)},
                  {"alpha", RationalTo(job.alpha)},
                  {"beta", RationalTo(job.beta)}};
    if (job.threshold) entry["threshold"] = RationalTo(*job.threshold);
    doc["jobs"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

AnySchedule ParseSchedule(const std::string& text, const Instance& instance) {
  const json doc = ParseJson(text);
  const json& kind = Require(doc, "kind", "schedule");
  const int n = instance.size();
  if (kind == "normal") {
    NormalSchedule s;
    const json& order = Require(doc, "order", "schedule");
    if (!order.is_array()) throw InputError("order must be an array");
    for (const json& id : order) s.order.push_back(JobIndex(instance, id));
    const json& C = Require(doc, "C", "schedule");
    if (!C.is_array() || static_cast<int>(C.size()) != n) {
      throw InputError("C must list one completion time per job");
    }
    for (const json& c : C) s.completion.push_back(RationalFrom(c, "C"));
    s.work = MatrixFrom(Require(doc, "W", "schedule"), n, "W");
    if (doc.contains("T")) s.temperature_witness = MatrixFrom(doc.at("T"), n, "T");
    try {
      ValidateNormalSchedule(instance, s);
    } catch (const ScheduleError& e) {
      throw InputError(std::string("invalid normal schedule: ") + e.what());
    }
    return s;
  }
  if (kind == "natural") {
    const json& intervals = Require(doc, "intervals", "schedule");
    if (!intervals.is_object()) throw InputError("intervals must be an object");
    std::vector<std::vector<Interval>> raw(n);
    for (const auto& [id, list] : intervals.items()) {
      const int j = JobIndex(instance, json(id));
      if (!list.is_array()) throw InputError("intervals of '" + id + "' must be an array");
      for (const json& pair : list) {
        if (!pair.is_array() || pair.size() != 2) {
          throw InputError("interval of '" + id + "' must be [start, end]");
        }
        raw[j].push_back({RationalFrom(pair[0], "start"), RationalFrom(pair[1], "end")});
      }
    }
    try {
      // Every job may run at once here; too many concurrent jobs is a
      // feasibility finding, not a parse failure.
      NaturalSchedule s = NaturalFromIntervals(std::move(raw), std::max(n, 1));
      s.machines = instance.machines;
      return s;
    } catch (const ScheduleError& e) {
      throw InputError(std::string("invalid natural schedule: ") + e.what());
    }
  }
  throw InputError("schedule kind must be \"normal\" or \"natural\"");
}

AnySchedule ReadScheduleFile(const std::string& path, const Instance& instance) {
  return ParseSchedule(ReadTextFile(path), instance);
}

std::string SerializeSchedule(const NormalSchedule& s, const Instance& instance) {
  json doc;
  doc["kind"] = "normal";
  doc["order"] = json::array();
  for (int j : s.order) doc["order"].push_back(instance.jobs[j].id);
  doc["C"] = json::array();
  for (const Rational& c : s.completion) doc["C"].push_back(RationalTo(c));
  doc["W"] = MatrixTo(s.work);
  if (s.temperature_witness) doc["T"] = MatrixTo(*s.temperature_witness);
  return doc.dump(2) + "\n";
}

std::string SerializeSchedule(const NaturalSchedule& s, const Instance& instance) {
  json doc;
  doc["kind"] = "natural";
  doc["intervals"] = json::object();
  for (std::size_t j = 0; j < s.intervals.size(); ++j) {
    json list = json::array();
    for (const Interval& iv : s.intervals[j]) {
      list.push_back({RationalTo(iv.start), RationalTo(iv.end)});
    }
    doc["intervals"][instance.jobs[j].id] = std::move(list);
  }
  return doc.dump(2) + "\n";
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteTextFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << contents;
  if (!out.flush()) throw InputError("cannot write '" + path + "'");
}

}  // namespace tempsched
