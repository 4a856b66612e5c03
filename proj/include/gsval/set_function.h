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

#ifndef GSVAL_SET_FUNCTION_H_
#define GSVAL_SET_FUNCTION_H_

#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "gsval/rational.h"
#include "gsval/subset.h"

namespace gsval {

// Largest supported ground set. The table has 2^m entries, so exhaustive
// class checks are practical up to about m = 14 and convolution up to about
// m = 16; the cap only bounds memory.
inline constexpr int kMaxItems = 24;

// A normalized set function over items 0..m-1, stored as a dense table of
// exact values indexed by subset mask. Immutable once built.
class SetFunction {
 public:
  // Validates 1 <= m <= kMaxItems, values.size() == 2^m, values[0] == 0 and
  // names.size() in {0, m}. Throws std::invalid_argument otherwise.
  SetFunction(int m, std::vector<Rational> values,
              std::vector<std::string> names = {});

  static SetFunction Zero(int m);

  // Tabulates fn(Subset) over all subsets. fn(empty) must be 0.
  template <typename Fn>
  static SetFunction Build(int m, Fn&& fn, std::vector<std::string> names = {}) {
    // A deduced GMP expression type would refer to the lambda's locals.
    using Result = std::decay_t<std::invoke_result_t<Fn&, Subset>>;
    static_assert(std::is_same_v<Result, Rational> || std::is_integral_v<Result>,
                  "fn must return Rational, not a GMP expression");
    CheckGroundSize(m);
    std::vector<Rational> values(size_t{1} << m);
    for (uint32_t mask = 0; mask < values.size(); ++mask) {
      values[mask] = fn(Subset(mask));
    }
    return SetFunction(m, std::move(values), std::move(names));
  }

  int m() const { return m_; }
  Subset ground() const { return Subset::Full(m_); }
  size_t table_size() const { return values_.size(); }
  std::span<const Rational> values() const { return values_; }
  const std::vector<std::string>& names() const { return names_; }

  // Unchecked lookup.
  const Rational& operator()(Subset s) const { return values_[s.mask()]; }

  // Checked lookup; throws std::domain_error if s is not a subset of the
  // ground set.
  const Rational& Evaluate(Subset s) const;

  // f(T | S) = f(T u S) - f(S).
  Rational Marginal(Subset t, Subset s) const {
    return values_[(t | s).mask()] - values_[s.mask()];
  }

  // Label of item i: the stored name, or a letter a, b, c, ... by default.
  std::string ItemName(int i) const;
  std::string FormatSubset(Subset s) const;

  friend bool operator==(const SetFunction& a, const SetFunction& b) {
    return a.m_ == b.m_ && a.values_ == b.values_;
  }

  static void CheckGroundSize(int m);

 private:
  int m_;
  std::vector<Rational> values_;
  std::vector<std::string> names_;
};

// Partition of the ground set into symmetry classes, ordered by lowest item.
struct SymmetryPartition {
  std::vector<Subset> classes;

  // Index of the class containing item i.
  int ClassOf(int i) const;
  // True if every class of `finer` lies inside a class of this partition.
  bool IsCoarseningOf(const SymmetryPartition& finer) const;

  friend bool operator==(const SymmetryPartition&,
                         const SymmetryPartition&) = default;
};

// f(Si) == f(Sj) for every S avoiding i and j.
bool AreSymmetric(const SetFunction& f, int i, int j);

// Pairwise symmetry checks merged with union-find; the relation is an
// equivalence, so the merge is exact.
SymmetryPartition SymmetryClasses(const SetFunction& f);

// Relabels items: item i of f becomes item perm[i] of the result, so
// result(perm(T)) = f(T). Throws std::domain_error if perm is not a bijection
// on 0..m-1.
SetFunction PermuteItems(const SetFunction& f, std::span<const int> perm);

// Restriction to the items in `keep`, reindexed in increasing order.
SetFunction Restrict(const SetFunction& f, Subset keep);

SetFunction Scale(const SetFunction& f, const Rational& factor);

// Sum of all table entries.
Rational TotalValue(const SetFunction& f);

// Appends an item with zero marginal value everywhere.
SetFunction AddDummyItem(const SetFunction& f);

}  // namespace gsval

#endif  // GSVAL_SET_FUNCTION_H_
