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

#include "gsval/set_function.h"

#include <numeric>
#include <stdexcept>

namespace gsval {

void SetFunction::CheckGroundSize(int m) {
  if (m < 1 || m > kMaxItems) {
    throw std::invalid_argument("ground set size " + std::to_string(m) +
                                " outside [1, " + std::to_string(kMaxItems) +
                                "]");
  }
}

SetFunction::SetFunction(int m, std::vector<Rational> values,
                         std::vector<std::string> names)
    : m_(m), values_(std::move(values)), names_(std::move(names)) {
  CheckGroundSize(m);
  if (values_.size() != (size_t{1} << m)) {
    throw std::invalid_argument("value table has " +
                                std::to_string(values_.size()) +
                                " entries, expected 2^" + std::to_string(m));
  }
  if (values_[0] != 0) {
    throw std::invalid_argument("value of the empty set must be 0, got " +
                                ToString(values_[0]));
  }
  if (!names_.empty() && names_.size() != static_cast<size_t>(m)) {
    throw std::invalid_argument("expected " + std::to_string(m) +
                                " item names, got " +
                                std::to_string(names_.size()));
  }
}

SetFunction SetFunction::Zero(int m) {
  CheckGroundSize(m);
  return SetFunction(m, std::vector<Rational>(size_t{1} << m));
}

const Rational& SetFunction::Evaluate(Subset s) const {
  if (!s.IsSubsetOf(ground())) {
    throw std::domain_error("subset mask " + std::to_string(s.mask()) +
                            " out of range for m = " + std::to_string(m_));
  }
  return values_[s.mask()];
}

std::string SetFunction::ItemName(int i) const {
  if (!names_.empty()) return names_[i];
  if (m_ <= 26) return std::string(1, static_cast<char>('a' + i));
  return "i" + std::to_string(i);
}

std::string SetFunction::FormatSubset(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (int i : s.Items()) {
    if (!first) out += ",";
    out += ItemName(i);
    first = false;
  }
  return out + "}";
}

int SymmetryPartition::ClassOf(int i) const {
  for (size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].contains(i)) return static_cast<int>(c);
  }
  return -1;
}

bool SymmetryPartition::IsCoarseningOf(const SymmetryPartition& finer) const {
  for (Subset fine : finer.classes) {
    const int c = ClassOf(fine.First());
    if (c < 0 || !fine.IsSubsetOf(classes[c])) return false;
  }
  return true;
}

bool AreSymmetric(const SetFunction& f, int i, int j) {
  if (i == j) return true;
  const Subset rest = f.ground().Without(i).Without(j);
  bool symmetric = true;
  ForEachSubset(rest, [&](Subset s) {
    if (symmetric && f(s.With(i)) != f(s.With(j))) symmetric = false;
  });
  return symmetric;
}

SymmetryPartition SymmetryClasses(const SetFunction& f) {
  const int m = f.m();
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (find(i) == find(j)) continue;
      if (AreSymmetric(f, i, j)) parent[find(j)] = find(i);
    }
  }
  SymmetryPartition partition;
  std::vector<int> class_index(m, -1);
  for (int i = 0; i < m; ++i) {
    const int root = find(i);
    if (class_index[root] < 0) {
      class_index[root] = static_cast<int>(partition.classes.size());
      partition.classes.emplace_back();
    }
    Subset& c = partition.classes[class_index[root]];
    c = c.With(i);
  }
  return partition;
}

SetFunction PermuteItems(const SetFunction& f, std::span<const int> perm) {
  const int m = f.m();
  if (perm.size() != static_cast<size_t>(m)) {
    throw std::domain_error("permutation has wrong length");
  }
  std::vector<bool> seen(m, false);
  for (int p : perm) {
    if (p < 0 || p >= m || seen[p]) {
      throw std::domain_error("not a permutation of the items");
    }
    seen[p] = true;
  }
  std::vector<Rational> values(f.table_size());
  for (uint32_t mask = 0; mask < values.size(); ++mask) {
    uint32_t image = 0;
    for (int i = 0; i < m; ++i) {
      if ((mask >> i) & 1u) image |= uint32_t{1} << perm[i];
    }
    values[image] = f(Subset(mask));
  }
  std::vector<std::string> names;
  if (!f.names().empty()) {
    names.resize(m);
    for (int i = 0; i < m; ++i) names[perm[i]] = f.names()[i];
  }
  return SetFunction(m, std::move(values), std::move(names));
}

SetFunction Restrict(const SetFunction& f, Subset keep) {
  if (!keep.IsSubsetOf(f.ground()) || keep.empty()) {
    throw std::domain_error("restriction must keep a nonempty set of items");
  }
  const std::vector<int> items = keep.Items();
  const int k = static_cast<int>(items.size());
  std::vector<std::string> names;
  if (!f.names().empty()) {
    for (int i : items) names.push_back(f.names()[i]);
  }
  return SetFunction::Build(
      k,
      [&](Subset s) {
        uint32_t mask = 0;
        for (int r = 0; r < k; ++r) {
          if (s.contains(r)) mask |= uint32_t{1} << items[r];
        }
        return f(Subset(mask));
      },
      std::move(names));
}

SetFunction Scale(const SetFunction& f, const Rational& factor) {
  return SetFunction::Build(f.m(), [&](Subset s) -> Rational {
    return f(s) * factor;
  }, f.names());
}

Rational TotalValue(const SetFunction& f) {
  Rational total = 0;
  for (const Rational& v : f.values()) total += v;
  return total;
}

SetFunction AddDummyItem(const SetFunction& f) {
  const int m = f.m();
  std::vector<std::string> names;
  if (!f.names().empty()) {
    names = f.names();
    names.push_back("dummy");
  }
  return SetFunction::Build(
      m + 1, [&](Subset s) { return f(s.Without(m)); }, std::move(names));
}

}  // namespace gsval
