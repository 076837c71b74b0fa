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

#include "cli.h"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "tempsched/discretize.h"
#include "tempsched/dynamics.h"
#include "tempsched/io.h"
#include "tempsched/lp.h"
#include "tempsched/order_lp.h"
#include "tempsched/plot.h"
#include "tempsched/random_instance.h"
#include "tempsched/solvers.h"

namespace tempsched {
namespace {

constexpr int kExitCheckFailed = 3;

std::string Exact(const Rational& v) {
  return ToString(v) + " (" + ToDecimal(v) + ")";
}

struct ArtifactPaths {
  std::string out;
  std::string csv;
  std::string svg;
};

void WriteTrajectoryArtifacts(const Instance& instance, const Trajectory& tr,
                              const ArtifactPaths& paths) {
  if (!paths.csv.empty()) WriteTextFile(paths.csv, EmitCsv(instance, tr));
  if (!paths.svg.empty()) WriteTextFile(paths.svg, EmitSvg(instance, tr));
}

void PrintReport(const Instance& instance, const FeasibilityReport& report,
                 std::ostream& out) {
  out << "feasible: " << (report.feasible ? "yes" : "no") << "\n";
  for (const Violation& v : report.violations) {
    out << "violation: " << ToString(v.kind);
    if (!v.job_id.empty()) out << " job " << v.job_id;
    out << " at t=" << ToString(v.time) << "\n";
  }
  for (int j = 0; j < instance.size(); ++j) {
    out << "completion " << instance.jobs[j].id << ": ";
    if (report.completions[j]) {
      out << Exact(*report.completions[j]) << "\n";
    } else {
      out << "missing\n";
    }
  }
  out << "sum: " << Exact(report.objective_sum) << "\n";
  out << "makespan: " << Exact(report.makespan) << "\n";
}

std::vector<int> ParseOrder(const Instance& instance, const std::string& text) {
  std::vector<int> order;
  std::stringstream stream(text);
  std::string id;
  while (std::getline(stream, id, ',')) {
    const int j = FindJob(instance, id);
    if (j < 0) throw InputError("--order names unknown job '" + id + "'");
    order.push_back(j);
  }
  return order;
}

void PrintOrder(const Instance& instance, const std::vector<int>& order,
                std::ostream& out) {
  out << "order:";
  for (int j : order) out << " " << instance.jobs[j].id;
  out << "\n";
}

int SolveSumCommand(const std::string& instance_path, const std::string& order_spec,
                    int brute_cap, const std::string& lp_path,
                    const ArtifactPaths& paths, std::ostream& out) {
  const Instance instance = Normalize(ReadInstanceFile(instance_path));
  SumResult result;
  if (order_spec == "spt") {
    result = SolveSum(instance);
  } else if (order_spec == "brute") {
    result = SolveSumBruteForce(instance, brute_cap);
  } else {
    result = SolveForOrder(instance, ParseOrder(instance, order_spec));
  }
  PrintOrder(instance, result.order, out);
  out << "value: " << Exact(result.value) << "\n";
  for (int i = 0; i < instance.size(); ++i) {
    out << "C " << instance.jobs[result.order[i]].id << ": "
        << Exact(result.schedule.completion[i]) << "\n";
  }
  if (!lp_path.empty()) {
    std::ostringstream text;
    WriteLpFormat(BuildOrderLp(instance, result.order,
                               Objective::kSumOfCompletionTimes).problem,
                  text);
    WriteTextFile(lp_path, text.str());
  }
  if (!paths.out.empty()) {
    WriteTextFile(paths.out, SerializeSchedule(result.schedule, instance));
  }
  WriteTrajectoryArtifacts(instance, Simulate(instance, result.schedule), paths);
  return kExitOk;
}

int SolveMakespanCommand(const std::string& instance_path, bool check_lp,
                         int brute_cap, const ArtifactPaths& paths,
                         std::ostream& out, std::ostream& err) {
  const Instance instance = Normalize(ReadInstanceFile(instance_path));
  const MakespanResult result = SolveMakespan(instance);
  Rational total = 0;
  for (const Job& job : instance.jobs) {
    out << "q " << job.id << ": " << Exact(MinMakespanSingle(job)) << "\n";
    total += job.p;
  }
  out << "load bound: " << Exact(total / instance.machines) << "\n";
  out << "value: " << Exact(result.value) << "\n";
  if (check_lp && instance.size() > 0) {
    const SumResult lp =
        SolveSumBruteForce(instance, brute_cap, Objective::kMakespan);
    out << "lp minimum over orders: " << Exact(lp.value) << "\n";
    if (lp.value != result.value) {
      err << "closed form and LP minimum disagree\n";
      return kExitCheckFailed;
    }
  }
  if (!paths.out.empty()) {
    WriteTextFile(paths.out, SerializeSchedule(result.schedule, instance));
  }
  WriteTrajectoryArtifacts(instance, Simulate(instance, result.schedule), paths);
  return kExitOk;
}

int SimulateCommand(const std::string& instance_path,
                    const std::string& schedule_path, bool print_trajectory,
                    const ArtifactPaths& paths, std::ostream& out) {
  const Instance instance = Normalize(ReadInstanceFile(instance_path));
  const AnySchedule schedule = ReadScheduleFile(schedule_path, instance);
  const Trajectory tr =
      std::visit([&](const auto& s) { return Simulate(instance, s); }, schedule);
  if (print_trajectory) {
    out << "breakpoints: " << tr.times.size() << "\n";
    for (std::size_t k = 0; k < tr.times.size(); ++k) {
      out << "t=" << ToString(tr.times[k]);
      for (int j = 0; j < tr.jobs(); ++j) {
        out << " T_" << instance.jobs[j].id << "=" << ToString(tr.temperature[j][k]);
      }
      out << "\n";
    }
  }
  const FeasibilityReport report = CheckFeasibility(instance, tr);
  PrintReport(instance, report, out);
  WriteTrajectoryArtifacts(instance, tr, paths);
  return report.feasible ? kExitOk : kExitInfeasible;
}

int DiscretizeCommand(const std::string& instance_path,
                      const std::string& schedule_path, const std::string& gamma_text,
                      std::optional<int> k, bool automatic, int max_k,
                      const std::string& out_path, std::ostream& out) {
  const Instance instance = Normalize(ReadInstanceFile(instance_path));
  if (k.has_value() == automatic) throw InputError("give exactly one of --k and --auto");
  const Rational gamma = ParseRational(gamma_text);
  if (gamma <= 1) throw InputError("--gamma must be greater than 1");
  const AnySchedule any = ReadScheduleFile(schedule_path, instance);
  const auto* normal = std::get_if<NormalSchedule>(&any);
  if (!normal) throw InputError("discretize expects a normal schedule");

  DiscretizeResult result;
  if (automatic) {
    try {
      result = DiscretizeAuto(instance, *normal, gamma, max_k);
    } catch (const ScheduleError& e) {
      throw InputError(e.what());
    }
  } else {
    result.scaled = GammaScale(*normal, gamma);
    try {
      result.schedule = TimeSlice(result.scaled, *k);
    } catch (const ScheduleError& e) {
      throw InputError(e.what());
    }
    result.k = *k;
  }

  const FeasibilityReport scaled = CheckFeasibility(instance, result.scaled);
  const FeasibilityReport sliced = CheckFeasibility(instance, result.schedule);
  out << "k: " << result.k << "\n";
  out << "feasible: " << (sliced.feasible ? "yes" : "no") << "\n";
  for (int j = 0; j < instance.size(); ++j) {
    out << instance.jobs[j].id << ":";
    if (sliced.completions[j] && scaled.completions[j]) {
      out << " C=" << Exact(*sliced.completions[j])
          << " gamma*C=" << Exact(*scaled.completions[j])
          << " delta=" << Exact(*sliced.completions[j] - *scaled.completions[j]);
    } else {
      out << " incomplete";
    }
    out << "\n";
  }
  if (!out_path.empty()) {
    WriteTextFile(out_path, SerializeSchedule(result.schedule, instance));
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Exact scheduling of jobs with heating and cooling dynamics", "tempsched"};
  app.require_subcommand(1);

  std::string instance_path, schedule_path;
  ArtifactPaths paths;
  int brute_cap = kDefaultBruteForceCap;

  auto* sum = app.add_subcommand("solve-sum", "minimize the sum of completion times");
  std::string order_spec = "spt";
  std::string lp_path;
  sum->add_option("instance", instance_path, "instance JSON")->required();
  sum->add_option("--order", order_spec, "spt, brute, or comma-separated job ids");
  sum->add_option("--brute-cap", brute_cap, "largest n for --order=brute");
  sum->add_option("--out", paths.out, "write the schedule JSON");
  sum->add_option("--csv", paths.csv, "write the trajectory CSV");
  sum->add_option("--svg", paths.svg, "write the trajectory SVG");
  sum->add_option("--lp", lp_path, "write the order LP in LP format");

  auto* makespan = app.add_subcommand("solve-makespan", "minimize the makespan");
  bool check_lp = false;
  makespan->add_option("instance", instance_path, "instance JSON")->required();
  makespan->add_flag("--check-lp", check_lp,
                     "compare against makespan LPs over all orders");
  makespan->add_option("--brute-cap", brute_cap, "largest n for --check-lp");
  makespan->add_option("--out", paths.out, "write the schedule JSON");
  makespan->add_option("--csv", paths.csv, "write the trajectory CSV");
  makespan->add_option("--svg", paths.svg, "write the trajectory SVG");

  auto* simulate = app.add_subcommand("simulate", "simulate a schedule and print its trajectory");
  auto* verify = app.add_subcommand("verify", "check a schedule for feasibility");
  for (auto* cmd : {simulate, verify}) {
    cmd->add_option("instance", instance_path, "instance JSON")->required();
    cmd->add_option("schedule", schedule_path, "schedule JSON")->required();
    cmd->add_option("--csv", paths.csv, "write the trajectory CSV");
    cmd->add_option("--svg", paths.svg, "write the trajectory SVG");
  }

  auto* discretize = app.add_subcommand("discretize", "turn a normal schedule into a natural one");
  std::string gamma_text;
  std::optional<int> k;
  bool automatic = false;
  int max_k = kDefaultMaxSlices;
  discretize->add_option("instance", instance_path, "instance JSON")->required();
  discretize->add_option("schedule", schedule_path, "normal schedule JSON")->required();
  discretize->add_option("--gamma", gamma_text, "time dilation factor > 1")->required();
  discretize->add_option("--k", k, "slices per completion interval");
  discretize->add_flag("--auto", automatic, "double k until the result is feasible");
  discretize->add_option("--k-max", max_k, "ceiling for --auto");
  discretize->add_option("--out", paths.out, "write the natural schedule JSON");

  auto* random = app.add_subcommand("random", "print a random instance");
  std::uint64_t seed = 1;
  RandomInstanceOptions options;
  random->add_option("--seed", seed, "RNG seed");
  random->add_option("--jobs", options.jobs, "number of jobs")->check(CLI::PositiveNumber);
  random->add_option("--machines", options.machines, "number of machines")
      ->check(CLI::PositiveNumber);
  random->add_option("--max-den", options.max_denominator, "largest denominator")
      ->check(CLI::PositiveNumber);
  random->add_flag("--mixed-rates", options.job_dependent_rates, "job-dependent rates");
  random->add_option("--out", paths.out, "write to a file instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (sum->parsed()) {
      return SolveSumCommand(instance_path, order_spec, brute_cap, lp_path, paths, out);
    }
    if (makespan->parsed()) {
      return SolveMakespanCommand(instance_path, check_lp, brute_cap, paths, out, err);
    }
    if (simulate->parsed() || verify->parsed()) {
      return SimulateCommand(instance_path, schedule_path, simulate->parsed(), paths, out);
    }
    if (discretize->parsed()) {
      return DiscretizeCommand(instance_path, schedule_path, gamma_text, k, automatic,
                               max_k, paths.out, out);
    }
    if (random->parsed()) {
      std::mt19937_64 rng(seed);
      const std::string text = SerializeInstance(RandomInstance(rng, options));
      if (paths.out.empty()) {
        out << text;
      } else {
        WriteTextFile(paths.out, text);
      }
      return kExitOk;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ScheduleError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace tempsched
