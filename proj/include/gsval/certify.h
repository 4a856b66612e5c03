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

// Ternary branch-and-prune search over triplet-condition branches.
//
// A candidate valuation g is described by one LP variable per nonempty
// subset (variable mask - 1; g(empty) = 0). For a combination (triplet i < j
// < k with base set S) the three pair sums are named after their singleton:
// term i is g(jk|S) + g(i|S), and so on. Choosing the minimum term forces
// the other two to be equal and at least the minimum, which is exactly "the
// maximum is attained at least twice". The search walks a ternary tree with
// one level per combination, solves an exact LP at every node and prunes
// infeasible subtrees.

#ifndef GSVAL_CERTIFY_H_
#define GSVAL_CERTIFY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gsval/lp.h"
#include "gsval/rational.h"
#include "gsval/set_function.h"
#include "gsval/subset.h"

namespace gsval {

struct Combination {
  Subset triplet;
  Subset base;

  friend bool operator==(const Combination&, const Combination&) = default;
};

// Throws std::domain_error unless the triplet has three items, the base is
// disjoint from it and both fit in m items.
void ValidateCombination(const Combination& c, int m);

// "(abd;e)"; items are letters a, b, c, ...
std::string FormatCombination(const Combination& c);
// Inverse of FormatCombination. Throws std::invalid_argument.
Combination ParseCombination(const std::string& text, int m);

// Every triplet (lexicographic) with every base set drawn from the other
// items (increasing mask).
std::vector<Combination> AllCombinations(int m);

struct BranchChoice {
  Combination combination;
  // Index 0..2 into the triplet items, naming the minimum term.
  int min_term = 0;
};

// g(S) as an LP expression: 0 for the empty set, variable mask - 1 otherwise.
LinExpr SubsetValue(Subset s);

// Returns {first non-minimum term >= minimum term, second non-minimum term ==
// first non-minimum term}, non-minimum terms taken in triplet order.
std::vector<Constraint> BranchConstraints(const BranchChoice& choice);

// Monotonicity g(S) <= g(Sj) and local submodularity over m items.
std::vector<Constraint> MonotoneSubmodularConstraints(int m);

// The instance with items a..e: g(ca) + g(deb) >= g(d x) + g(ce y) + 1 and
// g(ca) + g(deb) >= g(e x) + g(cd y) + 1 for x, y in {a, b}.
std::vector<Constraint> S1FixedConstraints();
inline constexpr int kS1Items = 5;

// The two six-combination sets that close the S1 tree.
std::vector<Combination> S1SufficientSet(int which);
// All 40 combinations with the combinations of the second sufficient set
// moved to the front.
std::vector<Combination> S1DefaultOrder();

struct SearchProblem {
  int m = 0;
  std::vector<Constraint> fixed;
  std::vector<Combination> order;
};

// A node is a partial assignment: step s branched on combination
// order[levels[s]] with minimum term path[s]. In a fixed-order search
// levels is 0, 1, 2, ...
struct PrunedNode {
  std::vector<int> levels;
  // Minimum-term choices from the root; empty for the root itself.
  std::vector<int> path;
  int pivots = 0;
};

struct Certificate {
  bool feasible = false;
  // Infeasible nodes, in the order found. Fail-first nodes are shrunk
  // partial assignments, so their levels need not form a path.
  std::vector<PrunedNode> pruned;
  int max_depth = 0;
  // Set when feasible: the leaf values and the path leading to it.
  std::optional<SetFunction> witness;
  std::vector<int> branch_levels;
  std::vector<int> branch_path;
  int64_t lps_solved = 0;
  int64_t nodes_visited = 0;
};

struct SearchOptions {
  bool include_mono_submod = false;
  // Threads used for the subtrees below the root (fixed order only).
  int jobs = 1;
  // Pick the next combination per node instead of following the order:
  // the unassigned one with the fewest LP-feasible children, earliest in the
  // order on ties. Each candidate costs up to three LPs, but infeasible
  // combinations surface near the root regardless of the order. Infeasible
  // children are shrunk to irreducible choice sets that prune later nodes
  // and let the search skip siblings that cannot matter.
  bool fail_first = false;
  // Stop after this many LPs (0 = unlimited); `exhausted` is then set.
  int64_t lp_budget = 0;
};

struct SearchResult {
  Certificate certificate;
  bool exhausted = false;
};

// Depth-first search in the given order (or fail-first). A feasible leaf
// stops the search. A child whose branch constraints hold at the parent's
// LP solution is feasible without solving a new LP. Throws
// std::domain_error on invalid or repeated combinations.
SearchResult TreeSearch(const SearchProblem& problem,
                        const SearchOptions& options = {});

// LP constraints of the node with the given levels and choices. Throws
// std::domain_error on mismatched lengths or bad or repeated levels.
std::vector<Constraint> NodeConstraints(const SearchProblem& problem,
                                        const std::vector<int>& levels,
                                        const std::vector<int>& path,
                                        bool include_mono_submod);
// Fixed-order form: levels 0, 1, ..., path.size() - 1.
std::vector<Constraint> NodeConstraints(const SearchProblem& problem,
                                        const std::vector<int>& path,
                                        bool include_mono_submod);

// Re-solves every pruned node (all must be infeasible) and checks that every
// full assignment of minimum terms extends some pruned node. For a feasible certificate,
// checks the witness against all constraints of its leaf.
bool ReplayCertificate(const SearchProblem& problem,
                       const Certificate& certificate,
                       bool include_mono_submod);

struct GapCertificate {
  Certificate certificate;
  SearchProblem problem;
  // Set when feasible: the witness's verified ratio against f.
  std::optional<Rational> witness_ratio;
};

// Searches for a GS g with g <= f <= rho g. Constraints: g(S) <= f(S),
// f(S) <= rho g(S), monotonicity, submodularity, optionally g(Si) = g(Sj)
// for f-symmetric i, j, and then the triplet branches over all combinations.
// A feasible witness is re-verified (GS, sandwich); a failure throws
// std::logic_error. Throws std::domain_error for rho < 1 or m > 6.
GapCertificate GsGapCertifier(const SetFunction& f, const Rational& rho,
                              bool respect_symmetries, int jobs = 1);

struct SufficientSetsResult {
  std::vector<std::vector<Combination>> sets;
  // False if the LP budget ran out before every subset was tried.
  bool complete = true;
  int64_t subsets_tried = 0;
  int64_t lps_solved = 0;
};

// Enumerates the size-subsets of the 40 S1 combinations (lexicographic by
// index) and keeps those whose tree is infeasible everywhere. lp_budget = 0
// means unlimited.
SufficientSetsResult FindSufficientSets(int size, int64_t lp_budget,
                                        int jobs = 1);

}  // namespace gsval

#endif  // GSVAL_CERTIFY_H_
