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

#include "gsval/certify.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <future>
#include <stdexcept>

#include "gsval/analysis.h"
#include "gsval/classes.h"

namespace gsval {

void ValidateCombination(const Combination& c, int m) {
  const Subset ground = Subset::Full(m);
  if (c.triplet.size() != 3) throw std::domain_error("triplet needs 3 items");
  if (!c.triplet.IsSubsetOf(ground) || !c.base.IsSubsetOf(ground)) {
    throw std::domain_error("combination leaves the ground set");
  }
  if (!(c.triplet & c.base).empty()) {
    throw std::domain_error("base set must avoid the triplet");
  }
}

std::string FormatCombination(const Combination& c) {
  std::string out = "(";
  for (int i : c.triplet.Items()) out += static_cast<char>('a' + i);
  out += ";";
  for (int i : c.base.Items()) out += static_cast<char>('a' + i);
  return out + ")";
}

Combination ParseCombination(const std::string& text, int m) {
  const size_t semi = text.find(';');
  if (text.size() < 3 || text.front() != '(' || text.back() != ')' ||
      semi == std::string::npos) {
    throw std::invalid_argument("malformed combination '" + text + "'");
  }
  auto parse_items = [&](std::string_view part) {
    Subset s;
    for (char ch : part) {
      const int i = ch - 'a';
      if (i < 0 || i >= m || s.contains(i)) {
        throw std::invalid_argument("bad item '" + std::string(1, ch) +
                                    "' in combination '" + text + "'");
      }
      s = s.With(i);
    }
    return s;
  };
  const std::string_view body(text.data() + 1, text.size() - 2);
  const size_t split = semi - 1;
  Combination c{parse_items(body.substr(0, split)),
                parse_items(body.substr(split + 1))};
  try {
    ValidateCombination(c, m);
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(std::string(e.what()) + " in '" + text + "'");
  }
  return c;
}

std::vector<Combination> AllCombinations(int m) {
  std::vector<Combination> out;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      for (int k = j + 1; k < m; ++k) {
        const Subset triplet = Subset::Of({i, j, k});
        ForEachSubset(Subset::Full(m) - triplet,
                      [&](Subset base) { out.push_back({triplet, base}); });
      }
    }
  }
  return out;
}

LinExpr SubsetValue(Subset s) {
  if (s.empty()) return LinExpr();
  return LinExpr::Var(static_cast<int>(s.mask()) - 1);
}

namespace {

// Pair sum named after singleton item t of the triplet, without the common
// -2 g(S) term: g(S u other two) + g(S t).
LinExpr Term(const Combination& c, int t) {
  const std::vector<int> items = c.triplet.Items();
  const Subset pair = c.triplet.Without(items[t]);
  return SubsetValue(c.base | pair) + SubsetValue(c.base.With(items[t]));
}

}  // namespace

std::vector<Constraint> BranchConstraints(const BranchChoice& choice) {
  if (choice.min_term < 0 || choice.min_term > 2) {
    throw std::domain_error("minimum term index must be 0, 1 or 2");
  }
  std::vector<int> others;
  for (int t = 0; t < 3; ++t) {
    if (t != choice.min_term) others.push_back(t);
  }
  const LinExpr min_term = Term(choice.combination, choice.min_term);
  const LinExpr first = Term(choice.combination, others[0]);
  const LinExpr second = Term(choice.combination, others[1]);
  return {GreaterEq(first, min_term), Equal(second, first)};
}

std::vector<Constraint> MonotoneSubmodularConstraints(int m) {
  std::vector<Constraint> out;
  const uint32_t n = uint32_t{1} << m;
  for (uint32_t mask = 0; mask < n; ++mask) {
    const Subset s(mask);
    for (int j = 0; j < m; ++j) {
      if (s.contains(j)) continue;
      out.push_back(LessEq(SubsetValue(s), SubsetValue(s.With(j))));
      for (int k = j + 1; k < m; ++k) {
        if (s.contains(k)) continue;
        out.push_back(GreaterEq(SubsetValue(s.With(j)) + SubsetValue(s.With(k)),
                                SubsetValue(s.With(j).With(k)) +
                                    SubsetValue(s)));
      }
    }
  }
  return out;
}

std::vector<Constraint> S1FixedConstraints() {
  constexpr int a = 0, b = 1, c = 2, d = 3, e = 4;
  const LinExpr lhs =
      SubsetValue(Subset::Of({c, a})) + SubsetValue(Subset::Of({d, e, b}));
  std::vector<Constraint> out;
  for (int x : {a, b}) {
    for (int y : {a, b}) {
      out.push_back(GreaterEq(lhs, SubsetValue(Subset::Of({d, x})) +
                                       SubsetValue(Subset::Of({c, e, y})) +
                                       LinExpr(Rational(1))));
    }
  }
  for (int x : {a, b}) {
    for (int y : {a, b}) {
      out.push_back(GreaterEq(lhs, SubsetValue(Subset::Of({e, x})) +
                                       SubsetValue(Subset::Of({c, d, y})) +
                                       LinExpr(Rational(1))));
    }
  }
  return out;
}

std::vector<Combination> S1SufficientSet(int which) {
  static const char* const kSets[2][6] = {
      {"(acd;b)", "(ace;b)", "(ade;b)", "(bce;a)", "(bde;a)", "(cde;b)"},
      {"(acd;e)", "(ace;d)", "(ade;c)", "(bcd;e)", "(bce;d)", "(cde;a)"}};
  if (which != 1 && which != 2) {
    throw std::domain_error("sufficient set index must be 1 or 2");
  }
  std::vector<Combination> out;
  for (const char* text : kSets[which - 1]) {
    out.push_back(ParseCombination(text, kS1Items));
  }
  return out;
}

std::vector<Combination> S1DefaultOrder() {
  std::vector<Combination> order = S1SufficientSet(2);
  for (const Combination& c : AllCombinations(kS1Items)) {
    if (std::find(order.begin(), order.end(), c) == order.end()) {
      order.push_back(c);
    }
  }
  return order;
}

std::vector<Constraint> NodeConstraints(const SearchProblem& problem,
                                        const std::vector<int>& levels,
                                        const std::vector<int>& path,
                                        bool include_mono_submod) {
  if (levels.size() != path.size()) {
    throw std::domain_error("levels and path differ in length");
  }
  std::vector<bool> seen(problem.order.size(), false);
  std::vector<Constraint> out = problem.fixed;
  if (include_mono_submod) {
    for (Constraint& c : MonotoneSubmodularConstraints(problem.m)) {
      out.push_back(std::move(c));
    }
  }
  for (size_t step = 0; step < path.size(); ++step) {
    const int level = levels[step];
    if (level < 0 || level >= static_cast<int>(seen.size()) || seen[level]) {
      throw std::domain_error("bad or repeated combination index");
    }
    seen[level] = true;
    for (Constraint& c :
         BranchConstraints({problem.order[level], path[step]})) {
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<Constraint> NodeConstraints(const SearchProblem& problem,
                                        const std::vector<int>& path,
                                        bool include_mono_submod) {
  if (path.size() > problem.order.size()) {
    throw std::domain_error("path longer than the combination order");
  }
  std::vector<int> levels(path.size());
  for (size_t i = 0; i < levels.size(); ++i) levels[i] = static_cast<int>(i);
  return NodeConstraints(problem, levels, path, include_mono_submod);
}

namespace {

int NumVars(int m) { return (1 << m) - 1; }

SetFunction WitnessFunction(int m, const std::vector<Rational>& x) {
  std::vector<Rational> values(size_t{1} << m);
  for (size_t mask = 1; mask < values.size(); ++mask) values[mask] = x[mask - 1];
  return SetFunction(m, std::move(values));
}

bool SatisfiesAll(const std::vector<Constraint>& constraints,
                  const std::vector<Rational>& x) {
  return std::all_of(constraints.begin(), constraints.end(),
                     [&](const Constraint& c) { return c.IsSatisfiedBy(x); });
}

class Searcher {
 public:
  Searcher(const SearchProblem& problem, const SearchOptions& options,
           std::atomic<int64_t>& lps)
      : problem_(problem),
        options_(options),
        lps_(lps),
        assign_(problem.order.size(), -1),
        by_choice_(3 * problem.order.size()),
        activity_(problem.order.size(), 0.0) {
    base_ = NodeConstraints(problem, {}, options.include_mono_submod);
    constraints_ = base_;
  }

  // Fixed order: the node at depth h branches on order[h]. `parent` is the
  // parent's LP solution and `branch` the constraints added by the last
  // step; when the parent solution already satisfies them the node is
  // feasible without a new LP. Returns true when a feasible leaf was found.
  bool VisitInOrder(const std::vector<Rational>* parent,
                    const std::vector<Constraint>& branch) {
    Enter();
    std::vector<Rational> own;
    const std::vector<Rational>* x = parent;
    if (parent == nullptr || !SatisfiesAll(branch, *parent)) {
      std::optional<LPOutcome> outcome = SolveNode();
      if (!outcome) return false;
      if (outcome->status == LPStatus::kInfeasible) {
        cert_.pruned.push_back({levels_, path_, outcome->pivots});
        return false;
      }
      own = std::move(outcome->witness);
      x = &own;
    }
    if (path_.size() == problem_.order.size()) return Leaf(*x);
    const int level = static_cast<int>(path_.size());
    for (int t = 0; t < 3; ++t) {
      if (VisitChildInOrder(level, t, x)) return true;
      if (exhausted_) return false;
    }
    return false;
  }

  bool VisitChildInOrder(int level, int t, const std::vector<Rational>* parent) {
    const std::vector<Constraint> branch = Push(level, t);
    const bool found = VisitInOrder(parent, branch);
    Pop(branch.size());
    return found;
  }

  // Fail-first: branch on the unassigned combination with the fewest
  // feasible children, the earliest in the order on ties. `x` solves the
  // current node. Every infeasible child is shrunk to an irreducible set of
  // branch choices and recorded as a pruned node; later candidates matching
  // one are dead without an LP. When no feasible leaf exists below, sets
  // `conflict` to the path levels whose choices already force that; a child
  // whose conflict misses the branched level lets its siblings be skipped.
  bool VisitFailFirst(const std::vector<Rational>& x,
                      std::vector<bool>& conflict) {
    Enter();
    if (path_.size() == problem_.order.size()) return Leaf(x);
    struct Child {
      int nogood = -1;
      std::vector<Rational> x;
    };
    int best = -1;
    int best_count = 4;
    std::array<Child, 3> best_children;
    // Solutions of this node's LP found so far; any of them satisfying a
    // branch shows that child feasible.
    std::vector<std::vector<Rational>> pool = {x};
    for (int level = 0; level < static_cast<int>(assign_.size()); ++level) {
      if (assign_[level] >= 0) continue;
      std::array<Child, 3> children;
      int count = 0;
      for (int t = 0; t < 3 && count < std::max(best_count, 2); ++t) {
        children[t].nogood = MatchNogood(level, t);
        if (children[t].nogood >= 0) continue;
        const std::vector<Constraint> branch =
            BranchConstraints({problem_.order[level], t});
        auto known = std::find_if(pool.begin(), pool.end(), [&](const auto& y) {
          return SatisfiesAll(branch, y);
        });
        if (known != pool.end()) {
          children[t].x = *known;
          ++count;
          continue;
        }
        constraints_.insert(constraints_.end(), branch.begin(), branch.end());
        std::optional<LPOutcome> outcome = SolveNode();
        constraints_.resize(constraints_.size() - branch.size());
        if (!outcome) return false;
        if (outcome->status != LPStatus::kInfeasible) {
          children[t].x = std::move(outcome->witness);
          pool.push_back(children[t].x);
          ++count;
        } else {
          children[t].nogood = Learn(level, t, outcome->pivots);
          if (exhausted_) return false;
        }
      }
      if (best < 0 || Prefer(count, level, best_count, best)) {
        best = level;
        best_count = count;
        best_children = std::move(children);
        if (count == 0) break;
      }
    }
    std::vector<bool> merged(conflict.size(), false);
    for (int t = 0; t < 3; ++t) {
      std::vector<bool> below(conflict.size(), false);
      bool found = false;
      if (best_children[t].nogood >= 0) {
        for (int level : cert_.pruned[best_children[t].nogood].levels) {
          below[level] = true;
        }
      } else {
        const std::vector<Constraint> branch = Push(best, t);
        found = VisitFailFirst(best_children[t].x, below);
        Pop(branch.size());
      }
      if (found) return true;
      if (exhausted_) return false;
      if (!below[best]) {
        conflict = std::move(below);
        return false;
      }
      for (size_t level = 0; level < merged.size(); ++level) {
        if (below[level]) merged[level] = true;
      }
    }
    merged[best] = false;
    conflict = std::move(merged);
    return false;
  }

  // Solves the LP of the current node; nullopt once the budget is spent.
  std::optional<LPOutcome> SolveNode() { return SolveWith(constraints_); }

  std::optional<LPOutcome> SolveWith(const std::vector<Constraint>& cs) {
    if (options_.lp_budget > 0 && lps_.fetch_add(1) >= options_.lp_budget) {
      exhausted_ = true;
      return std::nullopt;
    }
    if (options_.lp_budget <= 0) lps_.fetch_add(1);
    ++cert_.lps_solved;
    LPProblem lp;
    lp.num_vars = NumVars(problem_.m);
    lp.constraints = cs;
    return Solve(lp);
  }

  Certificate& certificate() { return cert_; }
  bool exhausted() const { return exhausted_; }

 private:
  void Enter() {
    ++cert_.nodes_visited;
    cert_.max_depth =
        std::max(cert_.max_depth, static_cast<int>(path_.size()));
  }

  bool Leaf(const std::vector<Rational>& x) {
    cert_.feasible = true;
    cert_.witness = WitnessFunction(problem_.m, x);
    cert_.branch_levels = levels_;
    cert_.branch_path = path_;
    return true;
  }

  std::vector<Constraint> Push(int level, int t) {
    std::vector<Constraint> branch =
        BranchConstraints({problem_.order[level], t});
    constraints_.insert(constraints_.end(), branch.begin(), branch.end());
    levels_.push_back(level);
    path_.push_back(t);
    assign_[level] = t;
    return branch;
  }

  // Forced or failed combinations first, then the one whose choices took
  // part in the most recent conflicts, then the order.
  bool Prefer(int count, int level, int best_count, int best) const {
    const int a = std::min(count, 2), b = std::min(best_count, 2);
    if (a != b) return a < b;
    return activity_[level] > activity_[best];
  }

  // A pruned node all of whose choices hold on the current path extended by
  // level = t, or -1. Only nodes containing that choice are scanned.
  int MatchNogood(int level, int t) const {
    for (int index : by_choice_[3 * level + t]) {
      const PrunedNode& node = cert_.pruned[index];
      bool match = true;
      for (size_t s = 0; s < node.levels.size() && match; ++s) {
        match = node.levels[s] == level || assign_[node.levels[s]] ==
                                               node.path[s];
      }
      if (match) return index;
    }
    return -1;
  }

  // The current path plus level = t is infeasible. Drops path choices one at
  // a time while the LP stays infeasible (the new choice is needed since the
  // path itself is feasible), records the rest as a pruned node and returns
  // its index. Stops shrinking when the LP budget runs out.
  int Learn(int level, int t, int pivots) {
    PrunedNode node{levels_, path_, pivots};
    node.levels.push_back(level);
    node.path.push_back(t);
    for (size_t s = node.levels.size() - 1; s-- > 0;) {
      std::vector<Constraint> cs = base_;
      for (size_t r = 0; r < node.levels.size(); ++r) {
        if (r == s) continue;
        for (Constraint& c :
             BranchConstraints({problem_.order[node.levels[r]], node.path[r]})) {
          cs.push_back(std::move(c));
        }
      }
      std::optional<LPOutcome> outcome = SolveWith(cs);
      if (!outcome) break;
      if (outcome->status == LPStatus::kInfeasible) {
        node.levels.erase(node.levels.begin() + s);
        node.path.erase(node.path.begin() + s);
        node.pivots = outcome->pivots;
      }
    }
    for (int l : node.levels) activity_[l] += bump_;
    bump_ /= kActivityDecay;
    const int index = static_cast<int>(cert_.pruned.size());
    for (size_t s = 0; s < node.levels.size(); ++s) {
      by_choice_[3 * node.levels[s] + node.path[s]].push_back(index);
    }
    cert_.pruned.push_back(std::move(node));
    return index;
  }

  void Pop(size_t branch_size) {
    assign_[levels_.back()] = -1;
    levels_.pop_back();
    path_.pop_back();
    constraints_.resize(constraints_.size() - branch_size);
  }

  const SearchProblem& problem_;
  const SearchOptions& options_;
  std::atomic<int64_t>& lps_;
  std::vector<Constraint> base_;
  std::vector<Constraint> constraints_;
  // Choice per combination index on the current path, -1 if open.
  std::vector<int> assign_;
  // Pruned nodes containing each choice, indexed 3 * level + t.
  std::vector<std::vector<int>> by_choice_;
  // Conflict counts with geometric decay, in the style of SAT solvers.
  static constexpr double kActivityDecay = 0.95;
  std::vector<double> activity_;
  double bump_ = 1;
  std::vector<int> levels_;
  std::vector<int> path_;
  Certificate cert_;
  bool exhausted_ = false;
};

void Merge(Certificate& into, Certificate&& from) {
  for (PrunedNode& node : from.pruned) into.pruned.push_back(std::move(node));
  into.max_depth = std::max(into.max_depth, from.max_depth);
  into.lps_solved += from.lps_solved;
  into.nodes_visited += from.nodes_visited;
  if (from.feasible) {
    into.feasible = true;
    into.witness = std::move(from.witness);
    into.branch_levels = std::move(from.branch_levels);
    into.branch_path = std::move(from.branch_path);
  }
}

}  // namespace

SearchResult TreeSearch(const SearchProblem& problem,
                        const SearchOptions& options) {
  for (size_t i = 0; i < problem.order.size(); ++i) {
    ValidateCombination(problem.order[i], problem.m);
    for (size_t j = 0; j < i; ++j) {
      if (problem.order[i] == problem.order[j]) {
        throw std::domain_error("combinations in the order must be distinct");
      }
    }
  }
  std::atomic<int64_t> lps{0};
  if (options.fail_first) {
    Searcher searcher(problem, options, lps);
    std::optional<LPOutcome> root = searcher.SolveNode();
    SearchResult result;
    if (!root) {
      result.certificate = std::move(searcher.certificate());
      result.exhausted = true;
    } else if (root->status == LPStatus::kInfeasible) {
      result.certificate = std::move(searcher.certificate());
      result.certificate.nodes_visited = 1;
      result.certificate.pruned.push_back({{}, {}, root->pivots});
    } else {
      std::vector<bool> conflict(problem.order.size(), false);
      searcher.VisitFailFirst(root->witness, conflict);
      result.certificate = std::move(searcher.certificate());
      result.exhausted = searcher.exhausted();
    }
    return result;
  }
  if (options.jobs <= 1 || problem.order.empty()) {
    Searcher searcher(problem, options, lps);
    searcher.VisitInOrder(nullptr, {});
    return {std::move(searcher.certificate()), searcher.exhausted()};
  }
  // Solve the root here, then the three subtrees concurrently. Results are
  // merged in branch order and everything after the first feasible subtree
  // is dropped, matching the sequential search.
  SearchResult result;
  Searcher root(problem, options, lps);
  std::optional<LPOutcome> root_outcome = root.SolveNode();
  result.certificate.nodes_visited = 1;
  result.certificate.lps_solved = root.certificate().lps_solved;
  if (!root_outcome) {
    result.exhausted = true;
    return result;
  }
  if (root_outcome->status == LPStatus::kInfeasible) {
    result.certificate.pruned.push_back({{}, {}, root_outcome->pivots});
    return result;
  }
  const std::vector<Rational> root_x = std::move(root_outcome->witness);
  std::vector<std::future<std::pair<Certificate, bool>>> futures;
  for (int t = 0; t < 3; ++t) {
    futures.push_back(std::async(std::launch::async, [&, t] {
      Searcher searcher(problem, options, lps);
      searcher.VisitChildInOrder(0, t, &root_x);
      return std::make_pair(std::move(searcher.certificate()),
                            searcher.exhausted());
    }));
  }
  for (auto& future : futures) {
    auto [cert, exhausted] = future.get();
    if (result.certificate.feasible) continue;
    Merge(result.certificate, std::move(cert));
    result.exhausted |= exhausted;
  }
  return result;
}

namespace {

// Whether every full assignment extending `assign` (-1 = open) extends one
// of the pruned partial assignments.
bool Covered(const std::vector<const PrunedNode*>& pruned,
             std::vector<int>& assign) {
  int pick = -1;
  for (const PrunedNode* node : pruned) {
    bool consistent = true;
    int open = -1;
    for (size_t s = 0; s < node->levels.size() && consistent; ++s) {
      const int level = node->levels[s];
      if (assign[level] < 0) {
        if (open < 0) open = level;
      } else if (assign[level] != node->path[s]) {
        consistent = false;
      }
    }
    if (!consistent) continue;
    if (open < 0) return true;
    if (pick < 0) pick = open;
  }
  if (pick < 0) return false;
  bool ok = true;
  for (int t = 0; t < 3 && ok; ++t) {
    assign[pick] = t;
    ok = Covered(pruned, assign);
  }
  assign[pick] = -1;
  return ok;
}

}  // namespace

bool ReplayCertificate(const SearchProblem& problem,
                       const Certificate& certificate,
                       bool include_mono_submod) {
  const int n = NumVars(problem.m);
  try {
    if (certificate.feasible) {
      if (!certificate.witness || certificate.witness->m() != problem.m ||
          certificate.branch_path.size() != problem.order.size()) {
        return false;
      }
      std::vector<Rational> x(n);
      for (int v = 0; v < n; ++v) x[v] = (*certificate.witness)(Subset(v + 1));
      return SatisfiesAll(
          NodeConstraints(problem, certificate.branch_levels,
                          certificate.branch_path, include_mono_submod),
          x);
    }
    std::vector<const PrunedNode*> pruned;
    for (const PrunedNode& node : certificate.pruned) {
      LPProblem lp;
      lp.num_vars = n;
      lp.constraints =
          NodeConstraints(problem, node.levels, node.path, include_mono_submod);
      if (Solve(lp).status != LPStatus::kInfeasible) return false;
      pruned.push_back(&node);
    }
    std::vector<int> assign(problem.order.size(), -1);
    return Covered(pruned, assign);
  } catch (const std::domain_error&) {
    return false;
  }
}

GapCertificate GsGapCertifier(const SetFunction& f, const Rational& rho,
                              bool respect_symmetries, int jobs) {
  if (rho < 1) throw std::domain_error("ratio must be at least 1");
  const int m = f.m();
  if (m > 6) throw std::domain_error("gap certifier supports m <= 6");
  GapCertificate out;
  out.problem.m = m;
  std::vector<Constraint>& fixed = out.problem.fixed;
  for (uint32_t mask = 1; mask < f.table_size(); ++mask) {
    const Subset s(mask);
    fixed.push_back(LessEq(SubsetValue(s), LinExpr(f(s))));
    fixed.push_back(GreaterEq(SubsetValue(s) * rho, LinExpr(f(s))));
  }
  for (Constraint& c : MonotoneSubmodularConstraints(m)) {
    fixed.push_back(std::move(c));
  }
  if (respect_symmetries) {
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        if (!AreSymmetric(f, i, j)) continue;
        ForEachSubset(f.ground().Without(i).Without(j), [&](Subset s) {
          fixed.push_back(Equal(SubsetValue(s.With(i)), SubsetValue(s.With(j))));
        });
      }
    }
  }
  out.problem.order = AllCombinations(m);
  SearchOptions options;
  options.jobs = jobs;
  out.certificate = TreeSearch(out.problem, options).certificate;
  if (out.certificate.feasible) {
    const SetFunction& g = *out.certificate.witness;
    const GapReport gap = ApproximationRatio(g, f);
    if (!IsGrossSubstitutes(g) || !gap.lower_ok || gap.infinite ||
        gap.ratio > rho) {
      throw std::logic_error("gap certifier witness failed re-verification");
    }
    out.witness_ratio = gap.ratio;
  }
  return out;
}

SufficientSetsResult FindSufficientSets(int size, int64_t lp_budget,
                                        int jobs) {
  if (size < 1 || size > 40) throw std::domain_error("size out of range");
  const std::vector<Combination> all = AllCombinations(kS1Items);
  const int n = static_cast<int>(all.size());
  SufficientSetsResult result;
  std::vector<int> index(size);
  for (int i = 0; i < size; ++i) index[i] = i;
  auto advance = [&]() {
    int i = size - 1;
    while (i >= 0 && index[i] == n - size + i) --i;
    if (i < 0) return false;
    ++index[i];
    for (int j = i + 1; j < size; ++j) index[j] = index[j - 1] + 1;
    return true;
  };
  const int batch = std::max(1, jobs);
  bool more = true;
  while (more) {
    std::vector<std::vector<Combination>> subsets;
    for (int b = 0; b < batch && more; ++b) {
      std::vector<Combination> order;
      for (int i : index) order.push_back(all[i]);
      subsets.push_back(std::move(order));
      more = advance();
    }
    std::vector<std::future<SearchResult>> futures;
    const int64_t remaining =
        lp_budget > 0 ? std::max<int64_t>(1, lp_budget - result.lps_solved) : 0;
    for (const auto& order : subsets) {
      futures.push_back(std::async(
          batch > 1 ? std::launch::async : std::launch::deferred, [&, order] {
            SearchProblem problem{kS1Items, S1FixedConstraints(), order};
            SearchOptions options;
            options.lp_budget = remaining;
            return TreeSearch(problem, options);
          }));
    }
    for (size_t b = 0; b < futures.size(); ++b) {
      SearchResult r = futures[b].get();
      result.lps_solved += r.certificate.lps_solved;
      if (r.exhausted) {
        result.complete = false;
        continue;
      }
      ++result.subsets_tried;
      if (!r.certificate.feasible) result.sets.push_back(subsets[b]);
    }
    if (!result.complete) break;
    if (lp_budget > 0 && result.lps_solved >= lp_budget && more) {
      result.complete = false;
      break;
    }
  }
  return result;
}

}  // namespace gsval
