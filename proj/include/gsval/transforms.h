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

// Operations on set functions: symmetrizations, convolution, endowment,
// concave composition and induction by bipartite networks.

#ifndef GSVAL_TRANSFORMS_H_
#define GSVAL_TRANSFORMS_H_

#include <span>
#include <utility>
#include <vector>

#include "gsval/rational.h"
#include "gsval/set_function.h"
#include "gsval/subset.h"

namespace gsval {

// out(Si) = out(Sj) = max(g(Si), g(Sj)) for S avoiding i and j; all other
// values unchanged. Throws std::domain_error if i == j or out of range.
SetFunction MaxSymmetrize(const SetFunction& g, int i, int j);

// One-sided version: only q(Sy) is raised to max(g(Sx), g(Sy)).
SetFunction PartialSymmetrize(const SetFunction& g, int x, int y);

struct FixpointResult {
  SetFunction result;
  // Pairs symmetrized, in order.
  std::vector<std::pair<int, int>> steps;
  // Sum of all values before the first step and after each step.
  std::vector<Rational> potentials;
};

// Max-symmetrizes g at the lexicographically first pair (i, j) that is
// symmetric in f but not in the current function, until no such pair is
// left. Throws std::domain_error if the ground sets differ.
FixpointResult SymmetrizeToFixpoint(const SetFunction& g, const SetFunction& f);

// (f * g)(S) = max over T within S of f(T) + g(S \ T). O(3^m).
SetFunction Convolve(const SetFunction& f, const SetFunction& g);
// Left fold of Convolve; the welfare function of the given valuations.
SetFunction ConvolveAll(std::span<const SetFunction> fs);

SetFunction Average(const SetFunction& f, const SetFunction& g);
SetFunction Sum(const SetFunction& f, const SetFunction& g);

// out(S) = f(S u X) - f(X) on the items outside X, reindexed in increasing
// order. Throws std::domain_error if X leaves the ground set or covers it.
SetFunction Endow(const SetFunction& f, Subset x);

// Piecewise-linear concave monotone function on x >= 0, extended past the
// last breakpoint with the last slope.
class ConcaveFn {
 public:
  // Breakpoints start at (0, 0) with strictly increasing x, non-increasing
  // and nonnegative slopes. Throws std::invalid_argument otherwise.
  static ConcaveFn Create(std::vector<std::pair<Rational, Rational>> points);
  static ConcaveFn Identity();
  // min(x, cap).
  static ConcaveFn Cap(const Rational& cap);

  // Throws std::domain_error for x < 0.
  Rational operator()(const Rational& x) const;
  const std::vector<std::pair<Rational, Rational>>& points() const {
    return points_;
  }

 private:
  explicit ConcaveFn(std::vector<std::pair<Rational, Rational>> points)
      : points_(std::move(points)) {}
  std::vector<std::pair<Rational, Rational>> points_;
};

// out(S) = c(f(S)). Throws std::domain_error if f takes a negative value.
SetFunction ConcaveCompose(const ConcaveFn& c, const SetFunction& f);

// Adds a copy x' of item x as item m: f(T) = v(T) if x' is not in T and
// f(T) = v((T \ x') u x) otherwise.
SetFunction Split(const SetFunction& v, int x);

// Replaces x and y by a new last item z with f(Sz) = max(v(Sx), v(Sy)); the
// remaining items keep their relative order.
SetFunction Aggregate(const SetFunction& v, int x, int y);

// f(S) = v(S) + sum of w over S. Weights may be negative.
SetFunction AdditivePerturb(const SetFunction& v, const std::vector<Rational>& w);

struct NetworkEdge {
  int u = 0;
  int v = 0;
  Rational weight;
};

// Bipartite graph between a new item set U and the items V of `inner`.
struct InductionNetwork {
  int u_size = 0;
  std::vector<NetworkEdge> edges;
  SetFunction inner = SetFunction::Zero(1);

  int v_size() const { return inner.m(); }
  // Throws std::domain_error on out-of-range endpoints or sizes.
  void Validate() const;
};

// Largest supported u_size + v_size for induction.
inline constexpr int kMaxInductionVertices = 20;

// max over matchings M with U-endpoints in S of
// inner(V-endpoints of M) + total weight of M. The empty matching is always
// allowed, so induce(empty) = inner(empty) = 0.
Rational Induce(const InductionNetwork& net, Subset s);
SetFunction InduceAll(const InductionNetwork& net);

// The same network expressed through Split, AdditivePerturb and Aggregate:
// one copy of each V item per incident edge, the edge weights added, then
// the copies grouped by U endpoint and aggregated (U vertices without edges
// become dummy items). Agrees with InduceAll when all weights are zero and
// inner is monotone; with nonzero weights two edges sharing a V endpoint
// can both be counted, so the two may differ.
SetFunction InduceByComposition(const InductionNetwork& net);

}  // namespace gsval

#endif  // GSVAL_TRANSFORMS_H_
