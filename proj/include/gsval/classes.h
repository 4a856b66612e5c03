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

// Exhaustive class membership checks and demand oracles.
//
// Every negative answer carries a witness: a base set plus the items (or a
// second set) at which the defining inequality fails, so callers can
// re-evaluate the violation directly on the table.

#ifndef GSVAL_CLASSES_H_
#define GSVAL_CLASSES_H_

#include <optional>
#include <string>
#include <vector>

#include "gsval/rational.h"
#include "gsval/set_function.h"
#include "gsval/subset.h"

namespace gsval {

struct Witness {
  Subset set;
  std::vector<int> items;
  // Second set, used by the subadditivity check.
  Subset other;
  std::string detail;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckResult {
  bool holds = true;
  std::optional<Witness> witness;

  explicit operator bool() const { return holds; }
  static CheckResult Pass() { return {}; }
  static CheckResult Fail(Witness w) { return {false, std::move(w)}; }
};

// f(S) <= f(Sj) for all S and j not in S. Witness: set = S, items = {j}.
CheckResult IsMonotone(const SetFunction& f);

// f(j | Sk) <= f(j | S) for all S and distinct j, k outside S.
// Witness: set = S, items = {j, k}.
CheckResult IsSubmodular(const SetFunction& f);

// For every S and triplet {i, j, k} outside S, the largest of
// f(ik|S) + f(j|S), f(jk|S) + f(i|S), f(ij|S) + f(k|S) is attained at least
// twice. Witness: set = S, items = {i, j, k}.
CheckResult SatisfiesTripletCondition(const SetFunction& f);

// Submodular and the triplet condition. The witness detail names the part
// that failed.
CheckResult IsGrossSubstitutes(const SetFunction& f);

// Every two symmetric items a, b are weak substitutes:
// f(a | Sc) >= f(a | Sb) for S avoiding a, b and c outside S u {a, b}.
// Witness: set = S, items = {a, b, c}.
CheckResult IsSymmetricWeakSubstitutes(const SetFunction& f);

// f(S) = sum of singleton values. Witness: set = S.
CheckResult IsAdditive(const SetFunction& f);

struct BudgetAdditiveFit {
  std::vector<Rational> values;
  Rational budget;
};

// Fits v_j = f({j}) and B = f(M) and checks f(S) = min(B, v(S)) everywhere.
std::optional<BudgetAdditiveFit> AsBudgetAdditive(const SetFunction& f);

// For every S, some nonnegative additive a supported on S has a(T) <= f(T)
// for all T within S and a(S) >= f(S); one exact LP per S. A non-monotone f
// is reported as not XOS with its monotonicity witness. Witness: set = S.
CheckResult IsXos(const SetFunction& f);

// f(S u T) <= f(S) + f(T). Witness: set = S, other = T.
CheckResult IsSubadditive(const SetFunction& f);

// c > 0 such that f is submodular and every marginal f(j | S) is 0 or c;
// 0 for the zero function; nullopt otherwise.
std::optional<Rational> MrfScale(const SetFunction& f);

// Minimum over S and triplets {i, j, k} outside S (each item in the role of
// k) of max{f(ik|S) + f(j|S), f(jk|S) + f(i|S)} / (f(ij|S) + f(k|S)),
// skipping zero denominators; 1 if no term remains. Throws
// std::domain_error if f is not submodular.
Rational LocalApproxRatio(const SetFunction& f);

struct ClassReport {
  bool normalized = true;
  CheckResult monotone;
  CheckResult additive;
  std::optional<BudgetAdditiveFit> budget_additive;
  CheckResult submodular;
  CheckResult gs;
  CheckResult sws;
  // Set only when the XOS check was requested.
  std::optional<CheckResult> xos;
  CheckResult subadditive;
  std::optional<Rational> mrf_scale;
};

ClassReport Classify(const SetFunction& f, bool check_xos = true);

// Prices are nonnegative and one per item; throws std::domain_error
// otherwise.
void ValidatePrices(const SetFunction& f, const std::vector<Rational>& prices);

struct DemandResult {
  Rational best_utility;
  // Every set attaining best_utility, increasing by mask.
  std::vector<Subset> demanded;
};

DemandResult DemandBruteForce(const SetFunction& f,
                              const std::vector<Rational>& prices);

struct GreedyDemand {
  Subset set;
  Rational utility;
};

// Repeatedly adds the item of largest strictly positive marginal utility,
// lowest index first on ties.
GreedyDemand DemandGreedy(const SetFunction& f,
                          const std::vector<Rational>& prices);

}  // namespace gsval

#endif  // GSVAL_CLASSES_H_
