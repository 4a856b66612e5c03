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

#include <random>
#include <set>
#include <vector>

#include "gtest/gtest.h"

namespace gsval {
namespace {

LinExpr X(int i, int c = 1) { return LinExpr::Var(i, c); }
LinExpr K(int c) { return LinExpr(Rational(c)); }

TEST(LinExprTest, DropsZeroCoefficients) {
  LinExpr e = X(0, 2) + X(1) - X(0, 2);
  EXPECT_EQ(e.terms().size(), 1u);
  EXPECT_EQ(e.MaxVariable(), 1);
  e *= 0;
  EXPECT_TRUE(e.terms().empty());
}

TEST(LinExprTest, Evaluate) {
  const LinExpr e = X(0, 3) + X(2, -1) + K(5);
  const std::vector<Rational> x = {1, 100, MakeRational(1, 2)};
  EXPECT_EQ(e.Evaluate(x), MakeRational(15, 2));
  EXPECT_THROW(e.Evaluate(std::vector<Rational>{1}), std::domain_error);
}

TEST(SolveTest, ContradictoryBoundsInfeasible) {
  LPProblem p{.num_vars = 1};
  p.constraints = {GreaterEq(X(0), K(1)), LessEq(X(0), K(0))};
  EXPECT_EQ(Solve(p).status, LPStatus::kInfeasible);
}

TEST(SolveTest, SimplexPointFeasible) {
  LPProblem p{.num_vars = 2};
  p.constraints = {Equal(X(0) + X(1), K(1)), GreaterEq(X(0), K(0)),
                   GreaterEq(X(1), K(0))};
  const LPOutcome out = Solve(p);
  ASSERT_EQ(out.status, LPStatus::kFeasible);
  EXPECT_EQ(out.witness[0] + out.witness[1], 1);
  EXPECT_GE(out.witness[0], 0);
  EXPECT_GE(out.witness[1], 0);
}

TEST(SolveTest, EmptyProblemFeasible) {
  LPProblem p{.num_vars = 3};
  const LPOutcome out = Solve(p);
  ASSERT_EQ(out.status, LPStatus::kFeasible);
  EXPECT_EQ(out.witness.size(), 3u);
}

TEST(SolveTest, InconsistentEqualities) {
  LPProblem p{.num_vars = 2};
  p.constraints = {Equal(X(0) + X(1), K(1)), Equal(X(0, 2) + X(1, 2), K(3))};
  EXPECT_EQ(Solve(p).status, LPStatus::kInfeasible);
}

TEST(SolveTest, Maximize) {
  // max x + y s.t. x + 2y <= 4, 3x + y <= 6, x, y >= 0: optimum at (8/5, 6/5).
  LPProblem p{.num_vars = 2};
  p.constraints = {LessEq(X(0) + X(1, 2), K(4)), LessEq(X(0, 3) + X(1), K(6))};
  p.lower_bounds = {Rational(0), Rational(0)};
  p.objective = Objective{X(0) + X(1), Sense::kMaximize};
  const LPOutcome out = Solve(p);
  ASSERT_EQ(out.status, LPStatus::kFeasible);
  EXPECT_EQ(*out.objective_value, MakeRational(14, 5));
  EXPECT_EQ(out.witness[0], MakeRational(8, 5));
  EXPECT_EQ(out.witness[1], MakeRational(6, 5));
}

TEST(SolveTest, MinimizeWithFreeVariable) {
  // min x s.t. x >= y - 3, y >= 2: optimum -1.
  LPProblem p{.num_vars = 2};
  p.constraints = {GreaterEq(X(0), X(1) - K(3)), GreaterEq(X(1), K(2))};
  p.objective = Objective{X(0), Sense::kMinimize};
  const LPOutcome out = Solve(p);
  ASSERT_EQ(out.status, LPStatus::kFeasible);
  EXPECT_EQ(*out.objective_value, -1);
}

TEST(SolveTest, Unbounded) {
  LPProblem p{.num_vars = 2};
  p.constraints = {GreaterEq(X(0), X(1))};
  p.objective = Objective{X(0), Sense::kMaximize};
  EXPECT_EQ(Solve(p).status, LPStatus::kUnbounded);

  LPProblem q{.num_vars = 2};
  q.constraints = {GreaterEq(X(0), K(0))};
  q.objective = Objective{X(1), Sense::kMinimize};
  EXPECT_EQ(Solve(q).status, LPStatus::kUnbounded);
}

TEST(SolveTest, InfeasibleBeatsUnbounded) {
  LPProblem p{.num_vars = 2};
  p.constraints = {GreaterEq(X(0), K(1)), LessEq(X(0), K(0))};
  p.objective = Objective{X(1), Sense::kMaximize};
  EXPECT_EQ(Solve(p).status, LPStatus::kInfeasible);
}

TEST(SolveTest, RejectsUnknownVariable) {
  LPProblem p{.num_vars = 1};
  p.constraints = {GreaterEq(X(1), K(0))};
  EXPECT_THROW(Solve(p), std::domain_error);
  LPProblem q{.num_vars = 1};
  q.lower_bounds = {Rational(0), Rational(0)};
  EXPECT_THROW(Solve(q), std::domain_error);
}

TEST(SolveTest, DegenerateCycleProneProblem) {
  // Beale's example; cycles under the textbook largest-coefficient rule.
  LPProblem p{.num_vars = 4};
  auto r = [](int n, int d) { return MakeRational(n, d); };
  LinExpr row1, row2;
  row1.AddTerm(0, r(1, 4)).AddTerm(1, -8).AddTerm(2, -1).AddTerm(3, 9);
  row2.AddTerm(0, r(1, 2)).AddTerm(1, -12).AddTerm(2, r(-1, 2)).AddTerm(3, 3);
  p.constraints = {LessEq(row1, K(0)), LessEq(row2, K(0)), LessEq(X(2), K(1))};
  p.lower_bounds = std::vector<std::optional<Rational>>(4, Rational(0));
  LinExpr obj;
  obj.AddTerm(0, r(3, 4)).AddTerm(1, -20).AddTerm(2, r(1, 2)).AddTerm(3, -6);
  p.objective = Objective{obj, Sense::kMaximize};
  const LPOutcome out = Solve(p);
  ASSERT_EQ(out.status, LPStatus::kFeasible);
  EXPECT_EQ(*out.objective_value, r(5, 4));
}

// Fourier-Motzkin oracle. Rows are (coefficients, constant) meaning
// a.x + c >= 0; every row is scaled so its first nonzero entry is +-1 and
// duplicates are merged.
using FmRow = std::pair<std::vector<Rational>, Rational>;

FmRow Normalize(FmRow row) {
  for (const Rational& a : row.first) {
    if (sgn(a) != 0) {
      const Rational s = abs(a);
      for (Rational& b : row.first) b /= s;
      row.second /= s;
      return row;
    }
  }
  if (sgn(row.second) > 0) row.second = 1;
  return row;
}

bool FourierMotzkinFeasible(std::vector<FmRow> rows, int n) {
  for (int done = 0; done < n; ++done) {
    // Eliminate the variable producing the fewest combined rows.
    int var = -1;
    size_t best = 0;
    for (int j = 0; j < n; ++j) {
      size_t pos = 0, neg = 0, any = 0;
      for (const FmRow& r : rows) {
        const int s = sgn(r.first[j]);
        pos += s > 0;
        neg += s < 0;
        any += s != 0;
      }
      if (any == 0) continue;
      const size_t cost = pos * neg;
      if (var < 0 || cost < best) {
        var = j;
        best = cost;
      }
    }
    if (var < 0) break;
    std::vector<FmRow> pos, neg;
    std::set<std::pair<std::vector<std::string>, std::string>> seen;
    std::vector<FmRow> next;
    auto push = [&](FmRow r) {
      r = Normalize(std::move(r));
      std::vector<std::string> key;
      for (const Rational& a : r.first) key.push_back(ToString(a));
      if (seen.insert({key, ToString(r.second)}).second) {
        next.push_back(std::move(r));
      }
    };
    for (FmRow& r : rows) {
      const int s = sgn(r.first[var]);
      if (s > 0) pos.push_back(r);
      if (s < 0) neg.push_back(r);
      if (s == 0) push(std::move(r));
    }
    for (const FmRow& p : pos) {
      for (const FmRow& q : neg) {
        const Rational wp = -q.first[var];
        const Rational wq = p.first[var];
        FmRow c{std::vector<Rational>(n), p.second * wp + q.second * wq};
        for (int j = 0; j < n; ++j) c.first[j] = p.first[j] * wp + q.first[j] * wq;
        c.first[var] = 0;
        push(std::move(c));
      }
    }
    rows = std::move(next);
  }
  for (const FmRow& r : rows) {
    if (sgn(r.second) < 0) return false;
  }
  return true;
}

std::vector<FmRow> ToFmRows(const std::vector<Constraint>& cons, int n) {
  std::vector<FmRow> rows;
  for (const Constraint& c : cons) {
    FmRow r{std::vector<Rational>(n), c.expr.constant()};
    for (const auto& [i, a] : c.expr.terms()) r.first[i] = a;
    FmRow neg = r;
    for (Rational& a : neg.first) a = -a;
    neg.second = -neg.second;
    if (c.relation != Relation::kLe) rows.push_back(r);
    if (c.relation != Relation::kGe) rows.push_back(neg);
  }
  return rows;
}

TEST(SolveTest, AgreesWithFourierMotzkinOnRandomProblems) {
  std::mt19937_64 rng(20260101);
  auto uniform = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  int feasible = 0, infeasible = 0, optimized = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = uniform(1, 8);
    const int rows = uniform(1, 12);
    LPProblem p{.num_vars = n};
    for (int r = 0; r < rows; ++r) {
      LinExpr e(Rational(uniform(-5, 5)));
      for (int j = 0; j < n; ++j) {
        if (uniform(0, 2) == 0) e.AddTerm(j, uniform(-3, 3));
      }
      const int kind = uniform(0, 9);
      const Relation rel = kind == 0   ? Relation::kEq
                           : kind < 5 ? Relation::kLe
                                      : Relation::kGe;
      p.constraints.push_back({e, rel});
    }
    const bool with_objective = uniform(0, 1) == 1;
    if (with_objective) {
      LinExpr obj;
      for (int j = 0; j < n; ++j) obj.AddTerm(j, uniform(-2, 2));
      p.objective = Objective{obj, uniform(0, 1) ? Sense::kMaximize
                                                 : Sense::kMinimize};
      if (uniform(0, 3) != 0) {
        p.lower_bounds.assign(n, Rational(-10));
        p.upper_bounds.assign(n, Rational(10));
      }
    }
    const LPOutcome out = Solve(p);
    const std::vector<FmRow> fm = ToFmRows(p.AllConstraints(), n);
    const bool oracle = FourierMotzkinFeasible(fm, n);
    ASSERT_EQ(out.status != LPStatus::kInfeasible, oracle) << "trial " << trial;
    if (!oracle) {
      ++infeasible;
      continue;
    }
    ++feasible;
    if (out.status == LPStatus::kFeasible && with_objective) {
      // No feasible point improves on the reported optimum by 1/1000.
      LPProblem better = p;
      const Rational step = MakeRational(1, 1000);
      const LinExpr& obj = p.objective->expr;
      better.constraints.push_back(
          p.objective->sense == Sense::kMaximize
              ? GreaterEq(obj, LinExpr(*out.objective_value + step))
              : LessEq(obj, LinExpr(*out.objective_value - step)));
      EXPECT_FALSE(FourierMotzkinFeasible(ToFmRows(better.AllConstraints(), n), n))
          << "trial " << trial;
      ++optimized;
    }
    if (out.status == LPStatus::kUnbounded) {
      LPProblem far = p;
      const LinExpr& obj = p.objective->expr;
      far.constraints.push_back(
          p.objective->sense == Sense::kMaximize
              ? GreaterEq(obj, K(1000000))
              : LessEq(obj, K(-1000000)));
      EXPECT_TRUE(FourierMotzkinFeasible(ToFmRows(far.AllConstraints(), n), n))
          << "trial " << trial;
    }
  }
  // Both verdicts must be exercised for the comparison to mean anything.
  EXPECT_GT(feasible, 50);
  EXPECT_GT(infeasible, 50);
  EXPECT_GT(optimized, 20);
}

TEST(SolveTest, Deterministic) {
  LPProblem p{.num_vars = 3};
  p.constraints = {GreaterEq(X(0) + X(1) + X(2), K(3)),
                   LessEq(X(0) - X(1), K(1)), GreaterEq(X(2), X(0))};
  const LPOutcome a = Solve(p);
  const LPOutcome b = Solve(p);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.pivots, b.pivots);
}

}  // namespace
}  // namespace gsval
