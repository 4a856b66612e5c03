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

// Exact rational linear programming.
//
// Variables are free unless a constraint says otherwise. Solve() runs a
// dictionary simplex over GMP rationals: equalities and free variables are
// eliminated by pivoting first, the remaining nonnegative system goes through
// an auxiliary-variable phase 1 and, when an objective is present, a phase 2.
// Every pivot choice follows Bland's rule, so runs are deterministic and never
// cycle.

#ifndef GSVAL_LP_H_
#define GSVAL_LP_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gsval/rational.h"

namespace gsval {

// Sum of coefficient * variable plus a constant. Zero coefficients are never
// stored.
class LinExpr {
 public:
  LinExpr() = default;
  explicit LinExpr(Rational constant) : constant_(std::move(constant)) {}

  static LinExpr Var(int index, Rational coefficient = 1) {
    LinExpr e;
    e.AddTerm(index, coefficient);
    return e;
  }

  LinExpr& AddTerm(int index, const Rational& coefficient);
  LinExpr& AddConstant(const Rational& c) {
    constant_ += c;
    return *this;
  }

  LinExpr& operator+=(const LinExpr& other);
  LinExpr& operator-=(const LinExpr& other);
  LinExpr& operator*=(const Rational& factor);
  friend LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
  friend LinExpr operator-(LinExpr a, const LinExpr& b) { return a -= b; }
  friend LinExpr operator*(LinExpr a, const Rational& k) { return a *= k; }

  const std::map<int, Rational>& terms() const { return terms_; }
  const Rational& constant() const { return constant_; }
  int MaxVariable() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first;
  }

  Rational Evaluate(std::span<const Rational> x) const;

  friend bool operator==(const LinExpr&, const LinExpr&) = default;

 private:
  std::map<int, Rational> terms_;
  Rational constant_ = 0;
};

enum class Relation { kEq, kLe, kGe };

// expr (=, <=, >=) 0.
struct Constraint {
  LinExpr expr;
  Relation relation = Relation::kGe;

  bool IsSatisfiedBy(std::span<const Rational> x) const;
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

// lhs >= rhs, lhs <= rhs, lhs == rhs.
inline Constraint GreaterEq(const LinExpr& lhs, const LinExpr& rhs) {
  return {lhs - rhs, Relation::kGe};
}
inline Constraint LessEq(const LinExpr& lhs, const LinExpr& rhs) {
  return {lhs - rhs, Relation::kLe};
}
inline Constraint Equal(const LinExpr& lhs, const LinExpr& rhs) {
  return {lhs - rhs, Relation::kEq};
}

enum class Sense { kMaximize, kMinimize };

struct Objective {
  LinExpr expr;
  Sense sense = Sense::kMaximize;
};

struct LPProblem {
  int num_vars = 0;
  std::vector<Constraint> constraints;
  std::optional<Objective> objective;
  // Optional per-variable bounds; empty vectors mean no bounds.
  std::vector<std::optional<Rational>> lower_bounds;
  std::vector<std::optional<Rational>> upper_bounds;

  // Throws std::domain_error if a variable index is out of range or the bound
  // vectors have the wrong length.
  void Validate() const;
  // Constraints plus the bounds expressed as constraints.
  std::vector<Constraint> AllConstraints() const;
};

enum class LPStatus { kFeasible, kInfeasible, kUnbounded };

struct LPOutcome {
  LPStatus status = LPStatus::kInfeasible;
  // Set when status is kFeasible (an optimal point if there is an objective).
  std::vector<Rational> witness;
  std::optional<Rational> objective_value;
  int pivots = 0;
};

// Solves p exactly. Feasible witnesses are re-checked against every
// constraint before returning; a failed check throws std::logic_error.
LPOutcome Solve(const LPProblem& p);

std::string ToString(LPStatus status);

}  // namespace gsval

#endif  // GSVAL_LP_H_
