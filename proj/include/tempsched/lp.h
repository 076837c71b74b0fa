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

#ifndef TEMPSCHED_LP_H_
#define TEMPSCHED_LP_H_

#include <ostream>
#include <string>
#include <vector>

#include "tempsched/rational.h"

namespace tempsched {

struct LinearTerm {
  int var;
  Rational coef;
};

// Sparse linear form; duplicate variables are summed on use.
struct LinearForm {
  std::vector<LinearTerm> terms;

  LinearForm& Add(int var, const Rational& coef);
  Rational Evaluate(const std::vector<Rational>& x) const;
};

enum class Relation { kLessEqual, kEqual };

struct LinearConstraint {
  std::string name;
  LinearForm lhs;
  Relation relation = Relation::kLessEqual;
  Rational rhs;

  bool IsSatisfiedBy(const std::vector<Rational>& x) const;
};

// minimize objective . x  subject to constraints, x >= 0.
class LpProblem {
 public:
  int AddVariable(std::string name);
  void AddConstraint(std::string name, LinearForm lhs, Relation relation,
                     Rational rhs);
  void SetObjective(LinearForm objective) { objective_ = std::move(objective); }

  int num_variables() const { return static_cast<int>(names_.size()); }
  int num_constraints() const { return static_cast<int>(constraints_.size()); }
  const std::vector<std::string>& variable_names() const { return names_; }
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }
  const LinearForm& objective() const { return objective_; }

  // Names of the constraints violated by x (including nonnegativity, reported
  // as "x >= 0" entries). Empty when x is feasible.
  std::vector<std::string> Violations(const std::vector<Rational>& x) const;

 private:
  std::vector<std::string> names_;
  std::vector<LinearConstraint> constraints_;
  LinearForm objective_;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

const char* ToString(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  std::vector<Rational> assignment;
  int pivots = 0;
};

// Exact two-phase primal simplex over the rationals. Entering columns are
// chosen by most negative reduced cost while the objective strictly improves;
// as soon as a degenerate pivot occurs Bland's smallest-index rule takes over
// until the objective moves again, which rules out cycling.
LpSolution SolveLp(const LpProblem& problem);

// CPLEX LP text format. Each row is scaled by the lcm of its denominators so
// that all printed coefficients are integers.
void WriteLpFormat(const LpProblem& problem, std::ostream& out);

}  // namespace tempsched

#endif  // TEMPSCHED_LP_H_
