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

// Generators for concrete valuation families and explicit approximators.

#ifndef GSVAL_CONSTRUCTIONS_H_
#define GSVAL_CONSTRUCTIONS_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gsval/rational.h"
#include "gsval/set_function.h"
#include "gsval/subset.h"

namespace gsval {

SetFunction Additive(const std::vector<Rational>& values);
// min(B, sum of values).
SetFunction BudgetAdditive(const std::vector<Rational>& values,
                           const Rational& budget);
// Largest single value in the set.
SetFunction UnitDemand(const std::vector<Rational>& values);

// Budget 1 and d + 1 levels; level h holds k^h items of value k^-h. Items are
// ordered by level and named a, b1..bk, c1..., and so on.
SetFunction BudgetAdditiveLevels(int k, int d);

// h(S) = sum_r min(g(S_r), T(r)) with S sorted by g descending, ties by
// ascending index. Throws std::domain_error unless |T| = |g|, T is
// non-increasing and g is nonnegative.
SetFunction ThresholdGs(const std::vector<Rational>& g,
                        const std::vector<Rational>& thresholds);

// The GS function on k + 1 items (a, b1..bk) with g(a) = (k+1)/2k,
// g(S) = (l+1)/2k for S of l >= 1 small items, and
// g(aS) = min((k+1+l)/2k, 1).
SetFunction Approx2Gs(int k);

// Parameters of the log m / log log m threshold approximator.
struct LogLogThresholds {
  // Lower approximation of ln ln m / ln m at denominator 10^6.
  Rational first;
  std::vector<Rational> thresholds;
  // The budget is rescaled to 1 + first before thresholding.
  Rational scaled_budget;
};

LogLogThresholds BaLogLogThresholds(int m);

// Threshold approximator for a budget-additive f with m >= 16: values are
// rescaled so the budget is 1 + L with L ~ ln ln m / ln m, the thresholds
// are T(1) = L and T(i) = 1/(i ln m) rounded down, and the result is scaled
// back. Throws std::domain_error for m < 16 or a non budget-additive f.
SetFunction BaLogLogApprox(const SetFunction& f);

// Powers-of-two class approximator: values (normalized by the budget) are
// rounded down to powers of two, each class t = 0..L with L = ceil(log2 m)
// contributes min(1, rounded class sum), and the total is divided by L + 1
// and scaled back by the budget. Throws std::domain_error for a non
// budget-additive f or a zero budget.
SetFunction BaLogApprox(const SetFunction& f);

// q groups of q items; item g*q + p is position p of group g. The value is
// the largest number of items from one group.
SetFunction XosGrid(int q);
// 2|S|/(2q-1) below size q, 2q/(2q-1) above, and at size q: 1 for a
// transversal (one item per group), 2q/(2q-1) otherwise.
SetFunction XosGridSubmodApprox(int q);

struct CoverageApproximation {
  // Weight shared by every universe element.
  Rational element_weight;
  int universe_size = 0;
  // covers[i] lists the universe elements item i covers.
  std::vector<std::vector<int>> covers;
  SetFunction g;
  int attempts = 0;
};

// Lower bound used for e / (e - 1).
Rational CoverageRatioBound();

// Randomized coverage approximation of a budget-additive f: item i covers
// v_i N / B random elements of a universe of N elements of weight
// rho_hat B / N. With verify set, resamples until f <= g <= rho_hat f holds
// on every set, up to max_attempts; throws std::runtime_error past the cap.
// Throws std::domain_error if rho_hat < 791/500, f is not budget-additive,
// or some v_i N / B is not an integer.
CoverageApproximation CoverageApproxBa(const SetFunction& f, int universe_size,
                                       uint64_t seed, const Rational& rho_hat,
                                       bool verify = true,
                                       int max_attempts = 10);

// Extensional matroid; both axioms are verified on construction.
class Matroid {
 public:
  // Throws std::invalid_argument if the family is empty, not downward
  // closed, violates the exchange property or leaves the ground set.
  static Matroid Create(int ground_size, std::vector<Subset> independent);

  static Matroid Uniform(int n, int rank);
  // Items are assigned to blocks; block b accepts at most capacities[b].
  static Matroid Partition(const std::vector<int>& block_of,
                           const std::vector<int>& capacities);
  // Edges of a multigraph on num_vertices vertices; forests are independent.
  static Matroid Graphic(int num_vertices,
                         const std::vector<std::pair<int, int>>& edges);

  int ground_size() const { return n_; }
  bool IsIndependent(Subset s) const { return independent_[s.mask()]; }
  int Rank(Subset s) const;
  // Independent sets in increasing mask order.
  std::vector<Subset> IndependentSets() const;

 private:
  Matroid(int n, std::vector<bool> independent)
      : n_(n), independent_(std::move(independent)) {}
  int n_;
  std::vector<bool> independent_;
};

inline constexpr int kMaxMatroidSize = 12;

// Bipartite graph between items (left) and right vertices; absent entries
// are missing edges.
struct BipartiteWeights {
  int left = 0;
  int right = 0;
  std::vector<std::vector<std::optional<Rational>>> weights;

  // Throws std::invalid_argument on inconsistent dimensions.
  void Validate() const;
};

// Maximum weight matching between S and the right side.
SetFunction Oxs(const BipartiteWeights& w);
// Maximum weight independent subset of S.
SetFunction Wmrf(const Matroid& matroid, const std::vector<Rational>& weights);
// Maximum weight matching between S and the right side whose matched right
// vertices are independent in `matroid`.
SetFunction Rado(const BipartiteWeights& w, const Matroid& matroid);
// Weighted sum of matroid ranks.
SetFunction Mrs(const std::vector<std::pair<Matroid, Rational>>& parts);

}  // namespace gsval

#endif  // GSVAL_CONSTRUCTIONS_H_
