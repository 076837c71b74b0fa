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

#include <map>
#include <numeric>

#include "tempsched/lp.h"

namespace tempsched {

LinearForm& LinearForm::Add(int var, const Rational& coef) {
  if (coef != 0) terms.push_back({var, coef});
  return *this;
}

Rational LinearForm::Evaluate(const std::vector<Rational>& x) const {
  Rational sum = 0;
  for (const LinearTerm& t : terms) sum += t.coef * x[t.var];
  return sum;
}

bool LinearConstraint::IsSatisfiedBy(const std::vector<Rational>& x) const {
  const Rational value = lhs.Evaluate(x);
  return relation == Relation::kEqual ? value == rhs : value <= rhs;
}

int LpProblem::AddVariable(std::string name) {
  names_.push_back(std::move(name));
  return num_variables() - 1;
}

void LpProblem::AddConstraint(std::string name, LinearForm lhs,
                              Relation relation, Rational rhs) {
  constraints_.push_back(
      {std::move(name), std::move(lhs), relation, std::move(rhs)});
}

std::vector<std::string> LpProblem::Violations(
    const std::vector<Rational>& x) const {
  std::vector<std::string> out;
  for (int v = 0; v < num_variables(); ++v) {
    if (x[v] < 0) out.push_back(names_[v] + " >= 0");
  }
  for (const LinearConstraint& c : constraints_) {
    if (!c.IsSatisfiedBy(x)) out.push_back(c.name);
  }
  return out;
}

const char* ToString(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

namespace {

// Combines duplicate variables and scales to integer coefficients.
std::map<int, mpz_class> IntegerRow(const LinearForm& form, Rational* rhs) {
  std::map<int, Rational> combined;
  for (const LinearTerm& t : form.terms) combined[t.var] += t.coef;
  mpz_class scale = 1;
  for (const auto& [var, coef] : combined) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), coef.get_den_mpz_t());
  }
  if (rhs) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), rhs->get_den_mpz_t());
  std::map<int, mpz_class> out;
  for (const auto& [var, coef] : combined) {
    if (coef == 0) continue;
    Rational scaled = coef * scale;
    out[var] = scaled.get_num();
  }
  if (rhs) *rhs *= scale;
  return out;
}

void WriteRow(const std::map<int, mpz_class>& row,
              const std::vector<std::string>& names, std::ostream& out) {
  if (row.empty()) {
    out << " 0";
    return;
  }
  bool first = true;
  for (const auto& [var, coef] : row) {
    const bool negative = coef < 0;
    out << (first ? (negative ? " -" : " ") : (negative ? " - " : " + "));
    const mpz_class magnitude = abs(coef);
    if (magnitude != 1) out << magnitude.get_str() << " ";
    out << names[var];
    first = false;
  }
}

}  // namespace

void WriteLpFormat(const LpProblem& problem, std::ostream& out) {
  out << "Minimize\n obj:";
  WriteRow(IntegerRow(problem.objective(), nullptr), problem.variable_names(),
           out);
  out << "\nSubject To\n";
  for (const LinearConstraint& c : problem.constraints()) {
    Rational rhs = c.rhs;
    const auto row = IntegerRow(c.lhs, &rhs);
    out << " " << c.name << ":";
    WriteRow(row, problem.variable_names(), out);
    out << (c.relation == Relation::kEqual ? " = " : " <= ") << rhs.get_str()
        << "\n";
  }
  // All variables are nonnegative, which is the format's default bound.
  out << "End\n";
}

}  // namespace tempsched
