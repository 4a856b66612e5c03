// Copyright 2026 The Authors.
//
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

#include "gsval/lp.h"

#include <stdexcept>
#include <utility>

namespace gsval {

LinExpr& LinExpr::AddTerm(int index, const Rational& coefficient) {
  if (index < 0) throw std::domain_error("negative variable index");
  if (sgn(coefficient) == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(index, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
  return *this;
}

LinExpr& LinExpr::operator+=(const LinExpr& other) {
  for (const auto& [index, c] : other.terms_) AddTerm(index, c);
  constant_ += other.constant_;
  return *this;
}

LinExpr& LinExpr::operator-=(const LinExpr& other) {
  for (const auto& [index, c] : other.terms_) AddTerm(index, -c);
  constant_ -= other.constant_;
  return *this;
}

LinExpr& LinExpr::operator*=(const Rational& factor) {
  if (sgn(factor) == 0) {
    terms_.clear();
    constant_ = 0;
    return *this;
  }
  for (auto& [index, c] : terms_) c *= factor;
  constant_ *= factor;
  return *this;
}

Rational LinExpr::Evaluate(std::span<const Rational> x) const {
  Rational value = constant_;
  for (const auto& [index, c] : terms_) {
    if (static_cast<size_t>(index) >= x.size()) {
      throw std::domain_error("assignment too short for variable " +
                              std::to_string(index));
    }
    value += c * x[index];
  }
  return value;
}

bool Constraint::IsSatisfiedBy(std::span<const Rational> x) const {
  const int s = sgn(expr.Evaluate(x));
  switch (relation) {
    case Relation::kEq:
      return s == 0;
    case Relation::kLe:
      return s <= 0;
    case Relation::kGe:
      return s >= 0;
  }
  return false;
}

void LPProblem::Validate() const {
  if (num_vars < 0) throw std::domain_error("negative variable count");
  for (const Constraint& c : constraints) {
    if (c.expr.MaxVariable() >= num_vars) {
      throw std::domain_error("constraint references variable " +
                              std::to_string(c.expr.MaxVariable()) +
                              " >= num_vars");
    }
  }
  if (objective && objective->expr.MaxVariable() >= num_vars) {
    throw std::domain_error("objective references an unknown variable");
  }
  auto check_bounds = [&](const auto& bounds) {
    if (!bounds.empty() && bounds.size() != static_cast<size_t>(num_vars)) {
      throw std::domain_error("bound vector length differs from num_vars");
    }
  };
  check_bounds(lower_bounds);
  check_bounds(upper_bounds);
}

std::vector<Constraint> LPProblem::AllConstraints() const {
  std::vector<Constraint> all = constraints;
  for (size_t i = 0; i < lower_bounds.size(); ++i) {
    if (lower_bounds[i]) {
      all.push_back(GreaterEq(LinExpr::Var(static_cast<int>(i)),
                              LinExpr(*lower_bounds[i])));
    }
  }
  for (size_t i = 0; i < upper_bounds.size(); ++i) {
    if (upper_bounds[i]) {
      all.push_back(LessEq(LinExpr::Var(static_cast<int>(i)),
                           LinExpr(*upper_bounds[i])));
    }
  }
  return all;
}

std::string ToString(LPStatus status) {
  switch (status) {
    case LPStatus::kFeasible:
      return "feasible";
    case LPStatus::kInfeasible:
      return "infeasible";
    case LPStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

namespace {

// Variable ids: 0..n-1 are the problem variables, n + r is the slack of
// inequality row r, and the phase-1 auxiliary variable is -1 so that Bland's
// rule always prefers it.
constexpr int kAuxVar = -1;

// basic = constant + sum_c coef[c] * column_var[c].
struct Row {
  int basic = 0;
  Rational constant;
  std::vector<Rational> coef;
};

// Expression recorded when a free variable is pivoted out of the dictionary.
struct Substitution {
  int var = 0;
  Rational constant;
  std::vector<std::pair<int, Rational>> terms;
};

enum class SimplexResult { kOptimal, kUnbounded };

class Dictionary {
 public:
  std::vector<int> column_var;
  std::vector<Row> rows;
  // Rows that follow every pivot without being part of the basis.
  std::vector<Row*> tracked;
  int pivots = 0;

  void Pivot(size_t r, size_t c) {
    Row& pr = rows[r];
    const Rational inv = 1 / pr.coef[c];
    pr.constant = -pr.constant * inv;
    for (size_t q = 0; q < pr.coef.size(); ++q) {
      if (q == c) continue;
      if (sgn(pr.coef[q]) != 0) pr.coef[q] = -pr.coef[q] * inv;
    }
    pr.coef[c] = inv;
    std::swap(pr.basic, column_var[c]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i != r) Substitute(rows[i], pr, c);
    }
    for (Row* row : tracked) Substitute(*row, pr, c);
    ++pivots;
  }

  void RemoveColumn(size_t c) {
    column_var.erase(column_var.begin() + static_cast<long>(c));
    for (Row& row : rows) row.coef.erase(row.coef.begin() + static_cast<long>(c));
    for (Row* row : tracked) {
      row->coef.erase(row->coef.begin() + static_cast<long>(c));
    }
  }

  // Maximizes `objective` with Bland's rule. All columns and basic variables
  // are nonnegative and the dictionary must be primal feasible.
  SimplexResult Maximize(Row& objective) {
    while (true) {
      int enter = -1;
      for (size_t c = 0; c < column_var.size(); ++c) {
        if (sgn(objective.coef[c]) > 0 &&
            (enter < 0 || column_var[c] < column_var[enter])) {
          enter = static_cast<int>(c);
        }
      }
      if (enter < 0) return SimplexResult::kOptimal;
      int leave = -1;
      Rational best_ratio;
      for (size_t r = 0; r < rows.size(); ++r) {
        const Rational& a = rows[r].coef[enter];
        if (sgn(a) >= 0) continue;
        Rational ratio = rows[r].constant / -a;
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && rows[r].basic < rows[leave].basic)) {
          leave = static_cast<int>(r);
          best_ratio = std::move(ratio);
        }
      }
      if (leave < 0) return SimplexResult::kUnbounded;
      Pivot(static_cast<size_t>(leave), static_cast<size_t>(enter));
    }
  }

 private:
  static void Substitute(Row& row, const Row& pr, size_t c) {
    if (sgn(row.coef[c]) == 0) return;
    const Rational b = row.coef[c];
    row.constant += b * pr.constant;
    for (size_t q = 0; q < pr.coef.size(); ++q) {
      if (q == c) {
        row.coef[q] = b * pr.coef[q];
      } else if (sgn(pr.coef[q]) != 0) {
        row.coef[q] += b * pr.coef[q];
      }
    }
  }
};

// Dense linear form over the problem variables.
struct DenseForm {
  std::vector<Rational> coef;
  Rational constant;
};

DenseForm ToDense(const LinExpr& e, int n) {
  DenseForm d{std::vector<Rational>(n), e.constant()};
  for (const auto& [index, c] : e.terms()) d.coef[index] = c;
  return d;
}

// Replaces variable p in `form` by the expression stored in `sub` (which has
// a zero coefficient on p).
void Eliminate(DenseForm& form, int p, const DenseForm& sub) {
  if (sgn(form.coef[p]) == 0) return;
  const Rational b = form.coef[p];
  form.coef[p] = 0;
  form.constant += b * sub.constant;
  for (size_t q = 0; q < sub.coef.size(); ++q) {
    if (sgn(sub.coef[q]) != 0) form.coef[q] += b * sub.coef[q];
  }
}

}  // namespace

LPOutcome Solve(const LPProblem& p) {
  p.Validate();
  const int n = p.num_vars;
  const std::vector<Constraint> all = p.AllConstraints();

  std::vector<DenseForm> equalities;
  std::vector<DenseForm> inequalities;  // form >= 0
  for (const Constraint& c : all) {
    DenseForm d = ToDense(c.expr, n);
    if (c.relation == Relation::kEq) {
      equalities.push_back(std::move(d));
    } else {
      if (c.relation == Relation::kLe) {
        for (Rational& v : d.coef) v = -v;
        d.constant = -d.constant;
      }
      inequalities.push_back(std::move(d));
    }
  }
  std::optional<DenseForm> objective;
  if (p.objective) {
    objective = ToDense(p.objective->expr, n);
    if (p.objective->sense == Sense::kMinimize) {
      for (Rational& v : objective->coef) v = -v;
      objective->constant = -objective->constant;
    }
  }

  LPOutcome outcome;

  // Gaussian elimination of the equalities: x_p = expression in the others.
  std::vector<std::pair<int, DenseForm>> eq_substitutions;
  std::vector<bool> eliminated(n, false);
  for (size_t e = 0; e < equalities.size(); ++e) {
    DenseForm& row = equalities[e];
    int pivot = -1;
    for (int q = 0; q < n; ++q) {
      if (sgn(row.coef[q]) != 0) {
        pivot = q;
        break;
      }
    }
    if (pivot < 0) {
      if (sgn(row.constant) != 0) return outcome;  // 0 = nonzero
      continue;
    }
    const Rational scale = -1 / row.coef[pivot];
    DenseForm sub{std::vector<Rational>(n), row.constant * scale};
    for (int q = 0; q < n; ++q) {
      if (q != pivot && sgn(row.coef[q]) != 0) sub.coef[q] = row.coef[q] * scale;
    }
    for (size_t f = e + 1; f < equalities.size(); ++f) {
      Eliminate(equalities[f], pivot, sub);
    }
    for (DenseForm& ineq : inequalities) Eliminate(ineq, pivot, sub);
    if (objective) Eliminate(*objective, pivot, sub);
    eliminated[pivot] = true;
    eq_substitutions.emplace_back(pivot, std::move(sub));
  }

  Dictionary dict;
  for (int q = 0; q < n; ++q) {
    if (!eliminated[q]) dict.column_var.push_back(q);
  }
  auto compress = [&](const DenseForm& d, int basic) {
    Row row{basic, d.constant, {}};
    row.coef.reserve(dict.column_var.size());
    for (int q : dict.column_var) row.coef.push_back(d.coef[q]);
    return row;
  };
  for (size_t r = 0; r < inequalities.size(); ++r) {
    dict.rows.push_back(compress(inequalities[r], n + static_cast<int>(r)));
  }
  Row objective_row;
  if (objective) {
    objective_row = compress(*objective, -2);
    dict.tracked.push_back(&objective_row);
  }

  // Pivot each free variable into the basis and set its row aside; columns
  // with no remaining constraint are dropped (value 0).
  std::vector<Substitution> free_substitutions;
  bool free_direction_in_objective = false;
  for (size_t c = 0; c < dict.column_var.size();) {
    const int var = dict.column_var[c];
    if (var >= n) {
      ++c;
      continue;
    }
    int row_index = -1;
    for (size_t r = 0; r < dict.rows.size(); ++r) {
      if (sgn(dict.rows[r].coef[c]) != 0) {
        row_index = static_cast<int>(r);
        break;
      }
    }
    if (row_index < 0) {
      if (objective && sgn(objective_row.coef[c]) != 0) {
        free_direction_in_objective = true;
      }
      dict.RemoveColumn(c);
      continue;
    }
    dict.Pivot(static_cast<size_t>(row_index), c);
    Row& row = dict.rows[row_index];
    Substitution sub{row.basic, row.constant, {}};
    for (size_t q = 0; q < row.coef.size(); ++q) {
      if (sgn(row.coef[q]) != 0) sub.terms.emplace_back(dict.column_var[q], row.coef[q]);
    }
    free_substitutions.push_back(std::move(sub));
    dict.rows.erase(dict.rows.begin() + row_index);
    ++c;
  }

  // Phase 1 with a single auxiliary variable.
  int most_negative = -1;
  for (size_t r = 0; r < dict.rows.size(); ++r) {
    if (sgn(dict.rows[r].constant) < 0 &&
        (most_negative < 0 ||
         dict.rows[r].constant < dict.rows[most_negative].constant)) {
      most_negative = static_cast<int>(r);
    }
  }
  if (most_negative >= 0) {
    dict.column_var.push_back(kAuxVar);
    for (Row& row : dict.rows) row.coef.emplace_back(1);
    for (Row* row : dict.tracked) row->coef.emplace_back(0);
    Row phase1{-3, 0, std::vector<Rational>(dict.column_var.size())};
    phase1.coef.back() = -1;
    dict.tracked.push_back(&phase1);
    dict.Pivot(static_cast<size_t>(most_negative), dict.column_var.size() - 1);
    dict.Maximize(phase1);
    dict.tracked.pop_back();
    if (sgn(phase1.constant) < 0) {
      outcome.pivots = dict.pivots;
      return outcome;
    }
    for (size_t r = 0; r < dict.rows.size(); ++r) {
      if (dict.rows[r].basic != kAuxVar) continue;
      int col = -1;
      for (size_t c = 0; c < dict.column_var.size(); ++c) {
        if (sgn(dict.rows[r].coef[c]) != 0) {
          col = static_cast<int>(c);
          break;
        }
      }
      if (col >= 0) {
        dict.Pivot(r, static_cast<size_t>(col));
      } else {
        dict.rows.erase(dict.rows.begin() + static_cast<long>(r));
      }
      break;
    }
    for (size_t c = 0; c < dict.column_var.size(); ++c) {
      if (dict.column_var[c] == kAuxVar) {
        dict.RemoveColumn(c);
        break;
      }
    }
  }

  if (objective) {
    if (free_direction_in_objective ||
        dict.Maximize(objective_row) == SimplexResult::kUnbounded) {
      outcome.status = LPStatus::kUnbounded;
      outcome.pivots = dict.pivots;
      return outcome;
    }
  }

  // Recover the point: columns are zero, basic variables equal their row
  // constants, free variables come back in reverse elimination order.
  const size_t num_ids = static_cast<size_t>(n) + inequalities.size();
  std::vector<Rational> value(num_ids);
  for (const Row& row : dict.rows) value[row.basic] = row.constant;
  for (auto it = free_substitutions.rbegin(); it != free_substitutions.rend();
       ++it) {
    Rational v = it->constant;
    for (const auto& [id, c] : it->terms) v += c * value[id];
    value[it->var] = std::move(v);
  }
  for (auto it = eq_substitutions.rbegin(); it != eq_substitutions.rend();
       ++it) {
    Rational v = it->second.constant;
    for (int q = 0; q < n; ++q) {
      if (sgn(it->second.coef[q]) != 0) v += it->second.coef[q] * value[q];
    }
    value[it->first] = std::move(v);
  }
  value.resize(n);

  for (const Constraint& c : all) {
    if (!c.IsSatisfiedBy(value)) {
      throw std::logic_error("simplex produced a point violating a constraint");
    }
  }
  outcome.status = LPStatus::kFeasible;
  if (p.objective) outcome.objective_value = p.objective->expr.Evaluate(value);
  outcome.witness = std::move(value);
  outcome.pivots = dict.pivots;
  return outcome;
}

}  // namespace gsval
