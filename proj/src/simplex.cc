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
#include <optional>
#include <vector>

#include "tempsched/lp.h"

namespace tempsched {
namespace {

struct SparseRow {
  std::map<int, Rational> coefs;
  Relation relation;
  Rational rhs;
};

// Substitutes fixed variables and turns single-variable equalities into
// fixings until nothing changes. Returns false when infeasibility is proven.
bool Presolve(std::vector<SparseRow>& rows,
              std::vector<std::optional<Rational>>& fixed) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<SparseRow> kept;
    kept.reserve(rows.size());
    for (SparseRow& row : rows) {
      for (auto it = row.coefs.begin(); it != row.coefs.end();) {
        if (fixed[it->first]) {
          row.rhs -= it->second * *fixed[it->first];
          it = row.coefs.erase(it);
        } else {
          ++it;
        }
      }
      if (row.coefs.empty()) {
        const bool ok = row.relation == Relation::kEqual ? row.rhs == 0
                                                         : row.rhs >= 0;
        if (!ok) return false;
        continue;
      }
      if (row.relation == Relation::kEqual && row.coefs.size() == 1) {
        const auto& [var, coef] = *row.coefs.begin();
        Rational value = row.rhs / coef;
        if (value < 0) return false;
        fixed[var] = std::move(value);
        changed = true;
        continue;
      }
      kept.push_back(std::move(row));
    }
    rows = std::move(kept);
  }
  return true;
}

enum class PhaseResult { kOptimal, kUnbounded };

// Dense tableau in canonical form: every row has one basic column with unit
// coefficient. obj_ holds reduced costs with -z in the rhs slot.
class Tableau {
 public:
  Tableau(int rows, int cols)
      : rows_(rows), cols_(cols), cells_(rows * (cols + 1)), obj_(cols + 1),
        basis_(rows, -1) {}

  Rational& at(int r, int c) { return cells_[r * (cols_ + 1) + c]; }
  Rational& rhs(int r) { return at(r, cols_); }
  Rational& cost(int c) { return obj_[c]; }
  int& basis(int r) { return basis_[r]; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  // Runs primal simplex over columns < allowed_cols.
  PhaseResult Optimize(int allowed_cols, int* pivots) {
    bool bland = false;
    while (true) {
      int enter = -1;
      for (int c = 0; c < allowed_cols; ++c) {
        if (sgn(obj_[c]) >= 0) continue;
        if (bland) {
          enter = c;
          break;
        }
        if (enter < 0 || obj_[c] < obj_[enter]) enter = c;
      }
      if (enter < 0) return PhaseResult::kOptimal;

      int leave = -1;
      Rational best_ratio, ratio;
      for (int r = 0; r < rows_; ++r) {
        const Rational& a = at(r, enter);
        if (sgn(a) <= 0) continue;
        mpq_div(ratio.get_mpq_t(), rhs(r).get_mpq_t(), a.get_mpq_t());
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return PhaseResult::kUnbounded;
      bland = sgn(best_ratio) == 0;
      Pivot(leave, enter);
      ++*pivots;
    }
  }

  void Pivot(int pr, int pc) {
    Rational* prow = &cells_[pr * (cols_ + 1)];
    const Rational inv = 1 / prow[pc];
    nonzero_.clear();
    for (int c = 0; c <= cols_; ++c) {
      if (sgn(prow[c]) == 0) continue;
      mpq_mul(prow[c].get_mpq_t(), prow[c].get_mpq_t(), inv.get_mpq_t());
      nonzero_.push_back(c);
    }
    for (int r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      Rational* row = r == rows_ ? obj_.data() : &cells_[r * (cols_ + 1)];
      if (sgn(row[pc]) == 0) continue;
      const Rational factor = row[pc];
      for (int c : nonzero_) {
        mpq_mul(tmp_.get_mpq_t(), factor.get_mpq_t(), prow[c].get_mpq_t());
        mpq_sub(row[c].get_mpq_t(), row[c].get_mpq_t(), tmp_.get_mpq_t());
      }
    }
    basis_[pr] = pc;
  }

  void RemoveRow(int r) {
    cells_.erase(cells_.begin() + r * (cols_ + 1),
                 cells_.begin() + (r + 1) * (cols_ + 1));
    basis_.erase(basis_.begin() + r);
    --rows_;
  }

 private:
  int rows_;
  int cols_;
  std::vector<Rational> cells_;
  std::vector<Rational> obj_;
  std::vector<int> basis_;
  std::vector<int> nonzero_;
  Rational tmp_;
};

}  // namespace

LpSolution SolveLp(const LpProblem& problem) {
  LpSolution solution;
  const int n = problem.num_variables();

  std::vector<SparseRow> rows;
  rows.reserve(problem.num_constraints());
  for (const LinearConstraint& c : problem.constraints()) {
    SparseRow row{{}, c.relation, c.rhs};
    for (const LinearTerm& t : c.lhs.terms) row.coefs[t.var] += t.coef;
    std::erase_if(row.coefs, [](const auto& kv) { return kv.second == 0; });
    rows.push_back(std::move(row));
  }
  std::vector<std::optional<Rational>> fixed(n);
  if (!Presolve(rows, fixed)) {
    solution.status = LpStatus::kInfeasible;
    return solution;
  }

  std::vector<int> column_of(n, -1);
  std::vector<int> variable_of;
  for (int v = 0; v < n; ++v) {
    if (!fixed[v]) {
      column_of[v] = static_cast<int>(variable_of.size());
      variable_of.push_back(v);
    }
  }
  const int structural = static_cast<int>(variable_of.size());
  const int m = static_cast<int>(rows.size());

  // Flip rows with negative rhs; count slacks and artificials.
  int slacks = 0;
  int artificials = 0;
  std::vector<int> slack_sign(m, 0);
  std::vector<bool> negate(m, false);
  for (int r = 0; r < m; ++r) {
    negate[r] = rows[r].rhs < 0;
    if (rows[r].relation == Relation::kLessEqual) {
      slack_sign[r] = negate[r] ? -1 : 1;
      ++slacks;
    }
    if (rows[r].relation == Relation::kEqual || negate[r]) ++artificials;
  }
  const int slack_base = structural;
  const int art_base = structural + slacks;
  Tableau tab(m, art_base + artificials);

  int next_slack = slack_base;
  int next_art = art_base;
  for (int r = 0; r < m; ++r) {
    const Rational sign = negate[r] ? -1 : 1;
    for (const auto& [var, coef] : rows[r].coefs) {
      tab.at(r, column_of[var]) = sign * coef;
    }
    tab.rhs(r) = sign * rows[r].rhs;
    if (slack_sign[r] != 0) {
      tab.at(r, next_slack) = slack_sign[r];
      if (slack_sign[r] > 0) tab.basis(r) = next_slack;
      ++next_slack;
    }
    if (tab.basis(r) < 0) {
      tab.at(r, next_art) = 1;
      tab.basis(r) = next_art++;
    }
  }

  // Phase 1: minimize the sum of artificials.
  if (artificials > 0) {
    for (int r = 0; r < m; ++r) {
      if (tab.basis(r) < art_base) continue;
      for (int c = 0; c < art_base; ++c) tab.cost(c) -= tab.at(r, c);
      tab.cost(tab.cols()) -= tab.rhs(r);
    }
    tab.Optimize(tab.cols(), &solution.pivots);
    if (sgn(tab.cost(tab.cols())) != 0) {
      solution.status = LpStatus::kInfeasible;
      return solution;
    }
    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (int r = tab.rows() - 1; r >= 0; --r) {
      if (tab.basis(r) < art_base) continue;
      int enter = -1;
      for (int c = 0; c < art_base && enter < 0; ++c) {
        if (sgn(tab.at(r, c)) != 0) enter = c;
      }
      if (enter >= 0) {
        tab.Pivot(r, enter);
        ++solution.pivots;
      } else {
        tab.RemoveRow(r);
      }
    }
  }

  // Phase 2.
  for (int c = 0; c <= tab.cols(); ++c) tab.cost(c) = 0;
  std::vector<Rational> cost(structural);
  Rational offset = 0;
  for (const LinearTerm& t : problem.objective().terms) {
    if (fixed[t.var]) {
      offset += t.coef * *fixed[t.var];
    } else {
      cost[column_of[t.var]] += t.coef;
    }
  }
  for (int c = 0; c < structural; ++c) tab.cost(c) = cost[c];
  for (int r = 0; r < tab.rows(); ++r) {
    const int b = tab.basis(r);
    if (b >= structural || sgn(cost[b]) == 0) continue;
    for (int c = 0; c < art_base; ++c) tab.cost(c) -= cost[b] * tab.at(r, c);
    tab.cost(tab.cols()) -= cost[b] * tab.rhs(r);
  }
  if (tab.Optimize(art_base, &solution.pivots) == PhaseResult::kUnbounded) {
    solution.status = LpStatus::kUnbounded;
    return solution;
  }

  solution.status = LpStatus::kOptimal;
  solution.assignment.assign(n, Rational(0));
  for (int v = 0; v < n; ++v) {
    if (fixed[v]) solution.assignment[v] = *fixed[v];
  }
  for (int r = 0; r < tab.rows(); ++r) {
    const int b = tab.basis(r);
    if (b < structural) solution.assignment[variable_of[b]] = tab.rhs(r);
  }
  solution.value = problem.objective().Evaluate(solution.assignment);
  return solution;
}

}  // namespace tempsched
