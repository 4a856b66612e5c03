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

#include "gsval/classes.h"

#include <algorithm>
#include <stdexcept>

#include "gsval/lp.h"

namespace gsval {

CheckResult IsMonotone(const SetFunction& f) {
  const uint32_t n = static_cast<uint32_t>(f.table_size());
  for (uint32_t mask = 0; mask < n; ++mask) {
    const Subset s(mask);
    for (int j = 0; j < f.m(); ++j) {
      if (s.contains(j)) continue;
      if (f(s.With(j)) < f(s)) return CheckResult::Fail({s, {j}, {}, ""});
    }
  }
  return CheckResult::Pass();
}

CheckResult IsSubmodular(const SetFunction& f) {
  const uint32_t n = static_cast<uint32_t>(f.table_size());
  for (uint32_t mask = 0; mask < n; ++mask) {
    const Subset s(mask);
    for (int j = 0; j < f.m(); ++j) {
      if (s.contains(j)) continue;
      for (int k = j + 1; k < f.m(); ++k) {
        if (s.contains(k)) continue;
        // f(Sj) + f(Sk) >= f(Sjk) + f(S).
        if (f(s.With(j)) + f(s.With(k)) < f(s.With(j).With(k)) + f(s)) {
          return CheckResult::Fail({s, {j, k}, {}, ""});
        }
      }
    }
  }
  return CheckResult::Pass();
}

namespace {

// Calls fn(S, i, j, k) for every S and i < j < k outside S; stops early when
// fn returns false.
template <typename Fn>
void ForEachTriplet(const SetFunction& f, Fn&& fn) {
  const uint32_t n = static_cast<uint32_t>(f.table_size());
  const int m = f.m();
  for (uint32_t mask = 0; mask < n; ++mask) {
    const Subset s(mask);
    for (int i = 0; i < m; ++i) {
      if (s.contains(i)) continue;
      for (int j = i + 1; j < m; ++j) {
        if (s.contains(j)) continue;
        for (int k = j + 1; k < m; ++k) {
          if (s.contains(k)) continue;
          if (!fn(s, i, j, k)) return;
        }
      }
    }
  }
}

}  // namespace

CheckResult SatisfiesTripletCondition(const SetFunction& f) {
  CheckResult result;
  ForEachTriplet(f, [&](Subset s, int i, int j, int k) {
    // The common -2 f(S) is dropped from all three pair sums.
    const Rational t_i = f(s.With(j).With(k)) + f(s.With(i));
    const Rational t_j = f(s.With(i).With(k)) + f(s.With(j));
    const Rational t_k = f(s.With(i).With(j)) + f(s.With(k));
    const Rational& top = std::max({t_i, t_j, t_k});
    const int count = (t_i == top) + (t_j == top) + (t_k == top);
    if (count >= 2) return true;
    result = CheckResult::Fail({s, {i, j, k}, {}, ""});
    return false;
  });
  return result;
}

CheckResult IsGrossSubstitutes(const SetFunction& f) {
  CheckResult sub = IsSubmodular(f);
  if (!sub) {
    sub.witness->detail = "submodularity";
    return sub;
  }
  CheckResult triplet = SatisfiesTripletCondition(f);
  if (!triplet) triplet.witness->detail = "triplet condition";
  return triplet;
}

CheckResult IsSymmetricWeakSubstitutes(const SetFunction& f) {
  const SymmetryPartition partition = SymmetryClasses(f);
  const int m = f.m();
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a == b || partition.ClassOf(a) != partition.ClassOf(b)) continue;
      const Subset rest = f.ground().Without(a).Without(b);
      CheckResult result;
      ForEachSubset(rest, [&](Subset s) {
        if (!result) return;
        // f(a | Sc) >= f(a | Sb), i.e. f(Sac) - f(Sc) >= f(Sab) - f(Sb).
        const Rational via_b = f(s.With(a).With(b)) - f(s.With(b));
        for (int c : (rest - s).Items()) {
          if (f(s.With(a).With(c)) - f(s.With(c)) < via_b) {
            result = CheckResult::Fail({s, {a, b, c}, {}, ""});
            return;
          }
        }
      });
      if (!result) return result;
    }
  }
  return CheckResult::Pass();
}

CheckResult IsAdditive(const SetFunction& f) {
  const uint32_t n = static_cast<uint32_t>(f.table_size());
  for (uint32_t mask = 1; mask < n; ++mask) {
    const Subset s(mask);
    const int low = s.First();
    if (f(s) != f(s.Without(low)) + f(Subset::Single(low))) {
      return CheckResult::Fail({s, {}, {}, ""});
    }
  }
  return CheckResult::Pass();
}

std::optional<BudgetAdditiveFit> AsBudgetAdditive(const SetFunction& f) {
  BudgetAdditiveFit fit;
  for (int j = 0; j < f.m(); ++j) fit.values.push_back(f(Subset::Single(j)));
  fit.budget = f(f.ground());
  const uint32_t n = static_cast<uint32_t>(f.table_size());
  std::vector<Rational> sums(n);
  for (uint32_t mask = 1; mask < n; ++mask) {
    const Subset s(mask);
    const int low = s.First();
    sums[mask] = sums[s.Without(low).mask()] + fit.values[low];
    if (f(s) != std::min(fit.budget, sums[mask])) return std::nullopt;
  }
  return fit;
}

namespace {

// Whether some nonnegative additive a on S satisfies a(T) <= f(T) for T
// within S and a(S) >= f(S).
bool HasSupportingClause(const SetFunction& f, Subset s) {
  const std::vector<int> items = s.Items();
  const int k = static_cast<int>(items.size());
  LPProblem p;
  p.num_vars = k;
  p.lower_bounds.assign(k, Rational(0));
  ForEachSubset(Subset::Full(k), [&](Subset local) {
    if (local.empty()) return;
    LinExpr sum;
    uint32_t mask = 0;
    for (int r : local.Items()) {
      sum.AddTerm(r, 1);
      mask |= uint32_t{1} << items[r];
    }
    p.constraints.push_back(LessEq(sum, LinExpr(f(Subset(mask)))));
  });
  LinExpr total;
  for (int r = 0; r < k; ++r) total.AddTerm(r, 1);
  p.constraints.push_back(GreaterEq(total, LinExpr(f(s))));
  return Solve(p).status == LPStatus::kFeasible;
}

}  // namespace

CheckResult IsXos(const SetFunction& f) {
  CheckResult mono = IsMonotone(f);
  if (!mono) {
    mono.witness->detail = "monotonicity";
    return mono;
  }
  const uint32_t n = static_cast<uint32_t>(f.table_size());
  for (uint32_t mask = 1; mask < n; ++mask) {
    if (!HasSupportingClause(f, Subset(mask))) {
      return CheckResult::Fail({Subset(mask), {}, {}, "no supporting clause"});
    }
  }
  return CheckResult::Pass();
}

CheckResult IsSubadditive(const SetFunction& f) {
  const uint32_t n = static_cast<uint32_t>(f.table_size());
  for (uint32_t a = 0; a < n; ++a) {
    for (uint32_t b = a; b < n; ++b) {
      if (f(Subset(a | b)) > f(Subset(a)) + f(Subset(b))) {
        return CheckResult::Fail({Subset(a), {}, Subset(b), ""});
      }
    }
  }
  return CheckResult::Pass();
}

std::optional<Rational> MrfScale(const SetFunction& f) {
  if (!IsSubmodular(f)) return std::nullopt;
  Rational scale = 0;
  const uint32_t n = static_cast<uint32_t>(f.table_size());
  for (uint32_t mask = 0; mask < n; ++mask) {
    const Subset s(mask);
    for (int j = 0; j < f.m(); ++j) {
      if (s.contains(j)) continue;
      const Rational marginal = f(s.With(j)) - f(s);
      if (sgn(marginal) == 0) continue;
      if (sgn(scale) == 0 && sgn(marginal) > 0) scale = marginal;
      if (marginal != scale) return std::nullopt;
    }
  }
  return scale;
}

Rational LocalApproxRatio(const SetFunction& f) {
  if (!IsSubmodular(f)) {
    throw std::domain_error("local approximation ratio needs a submodular f");
  }
  std::optional<Rational> best;
  ForEachTriplet(f, [&](Subset s, int i, int j, int k) {
    const int t[3] = {i, j, k};
    for (int role = 0; role < 3; ++role) {
      const int x = t[(role + 1) % 3];
      const int y = t[(role + 2) % 3];
      const int z = t[role];
      const Rational& base = f(s);
      // Pair sums with z as the singleton of the denominator.
      const Rational denom = f(s.With(x).With(y)) + f(s.With(z)) - 2 * base;
      if (sgn(denom) == 0) continue;
      const Rational a = f(s.With(x).With(z)) + f(s.With(y)) - 2 * base;
      const Rational b = f(s.With(y).With(z)) + f(s.With(x)) - 2 * base;
      Rational ratio = std::max(a, b) / denom;
      if (!best || ratio < *best) best = std::move(ratio);
    }
    return true;
  });
  return best.value_or(Rational(1));
}

ClassReport Classify(const SetFunction& f, bool check_xos) {
  ClassReport r;
  r.monotone = IsMonotone(f);
  r.additive = IsAdditive(f);
  r.budget_additive = AsBudgetAdditive(f);
  r.submodular = IsSubmodular(f);
  r.gs = IsGrossSubstitutes(f);
  r.sws = IsSymmetricWeakSubstitutes(f);
  if (check_xos) r.xos = IsXos(f);
  r.subadditive = IsSubadditive(f);
  r.mrf_scale = MrfScale(f);
  return r;
}

void ValidatePrices(const SetFunction& f, const std::vector<Rational>& prices) {
  if (prices.size() != static_cast<size_t>(f.m())) {
    throw std::domain_error("expected " + std::to_string(f.m()) +
                            " prices, got " + std::to_string(prices.size()));
  }
  for (const Rational& p : prices) {
    if (sgn(p) < 0) throw std::domain_error("negative price " + ToString(p));
  }
}

DemandResult DemandBruteForce(const SetFunction& f,
                              const std::vector<Rational>& prices) {
  ValidatePrices(f, prices);
  const uint32_t n = static_cast<uint32_t>(f.table_size());
  std::vector<Rational> cost(n);
  DemandResult result{0, {Subset()}};
  for (uint32_t mask = 1; mask < n; ++mask) {
    const Subset s(mask);
    const int low = s.First();
    cost[mask] = cost[s.Without(low).mask()] + prices[low];
    Rational utility = f(s) - cost[mask];
    if (utility > result.best_utility) {
      result.best_utility = std::move(utility);
      result.demanded.assign(1, s);
    } else if (utility == result.best_utility) {
      result.demanded.push_back(s);
    }
  }
  return result;
}

GreedyDemand DemandGreedy(const SetFunction& f,
                          const std::vector<Rational>& prices) {
  ValidatePrices(f, prices);
  GreedyDemand result{Subset(), 0};
  while (true) {
    int best = -1;
    Rational best_gain = 0;
    for (int j = 0; j < f.m(); ++j) {
      if (result.set.contains(j)) continue;
      Rational gain = f(result.set.With(j)) - f(result.set) - prices[j];
      if (gain > best_gain) {
        best = j;
        best_gain = std::move(gain);
      }
    }
    if (best < 0) break;
    result.set = result.set.With(best);
    result.utility += best_gain;
  }
  return result;
}

}  // namespace gsval
