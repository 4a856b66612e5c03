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

#include "gsval/constructions.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gsval/classes.h"
#include "gsval/sampling.h"

namespace gsval {
namespace {

void CheckItemCount(size_t n) {
  SetFunction::CheckGroundSize(static_cast<int>(n));
}

// Sum of values over each subset, built incrementally.
std::vector<Rational> SubsetSums(const std::vector<Rational>& values) {
  std::vector<Rational> sums(size_t{1} << values.size());
  for (uint32_t mask = 1; mask < sums.size(); ++mask) {
    const Subset s(mask);
    const int low = s.First();
    sums[mask] = sums[s.Without(low).mask()] + values[low];
  }
  return sums;
}

}  // namespace

SetFunction Additive(const std::vector<Rational>& values) {
  CheckItemCount(values.size());
  std::vector<Rational> sums = SubsetSums(values);
  return SetFunction(static_cast<int>(values.size()), std::move(sums));
}

SetFunction BudgetAdditive(const std::vector<Rational>& values,
                           const Rational& budget) {
  CheckItemCount(values.size());
  std::vector<Rational> sums = SubsetSums(values);
  for (Rational& v : sums) v = std::min(v, budget);
  sums[0] = 0;
  return SetFunction(static_cast<int>(values.size()), std::move(sums));
}

SetFunction UnitDemand(const std::vector<Rational>& values) {
  CheckItemCount(values.size());
  std::vector<Rational> table(size_t{1} << values.size());
  for (uint32_t mask = 1; mask < table.size(); ++mask) {
    const Subset s(mask);
    const int low = s.First();
    table[mask] = s.size() == 1 ? values[low]
                                : std::max(table[s.Without(low).mask()],
                                           values[low]);
  }
  return SetFunction(static_cast<int>(values.size()), std::move(table));
}

SetFunction BudgetAdditiveLevels(int k, int d) {
  if (k < 2 || d < 1) throw std::domain_error("levels need k >= 2, d >= 1");
  std::vector<Rational> values;
  std::vector<std::string> names;
  int64_t count = 1;
  for (int h = 0; h <= d; ++h) {
    if (values.size() + count > static_cast<size_t>(kMaxItems)) {
      throw std::domain_error("BA(" + std::to_string(k) + "," +
                              std::to_string(d) + ") exceeds " +
                              std::to_string(kMaxItems) + " items");
    }
    const Rational value = MakeRational(1, count);
    const std::string letter(1, static_cast<char>('a' + h));
    for (int64_t i = 0; i < count; ++i) {
      values.push_back(value);
      names.push_back(h == 0 ? letter : letter + std::to_string(i + 1));
    }
    count *= k;
  }
  SetFunction f = BudgetAdditive(values, Rational(1));
  return SetFunction(f.m(), std::vector<Rational>(f.values().begin(),
                                                  f.values().end()),
                     std::move(names));
}

SetFunction ThresholdGs(const std::vector<Rational>& g,
                        const std::vector<Rational>& thresholds) {
  CheckItemCount(g.size());
  if (thresholds.size() != g.size()) {
    throw std::domain_error("need one threshold per position");
  }
  for (size_t r = 1; r < thresholds.size(); ++r) {
    if (thresholds[r] > thresholds[r - 1]) {
      throw std::domain_error("thresholds must be non-increasing");
    }
  }
  for (const Rational& v : g) {
    if (sgn(v) < 0) throw std::domain_error("item values must be >= 0");
  }
  const int m = static_cast<int>(g.size());
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g[a] > g[b]; });
  return SetFunction::Build(m, [&](Subset s) {
    Rational total = 0;
    int position = 0;
    for (int j : order) {
      if (!s.contains(j)) continue;
      total += std::min(g[j], thresholds[position++]);
    }
    return total;
  });
}

SetFunction Approx2Gs(int k) {
  if (k < 2) throw std::domain_error("approximator needs k >= 2");
  CheckItemCount(static_cast<size_t>(k) + 1);
  std::vector<std::string> names = {"a"};
  for (int i = 1; i <= k; ++i) names.push_back("b" + std::to_string(i));
  return SetFunction::Build(
      k + 1,
      [&](Subset s) -> Rational {
        const int small = s.Without(0).size();
        if (s.contains(0)) {
          return std::min(MakeRational(k + 1 + small, 2 * k), Rational(1));
        }
        if (small == 0) return 0;
        return MakeRational(small + 1, 2 * k);
      },
      std::move(names));
}

LogLogThresholds BaLogLogThresholds(int m) {
  if (m < 16) throw std::domain_error("log log thresholds need m >= 16");
  constexpr int64_t kDenominator = 1000000;
  const double ln_m = std::log(static_cast<double>(m));
  LogLogThresholds t;
  t.first = FloorToDenominator(std::log(ln_m) / ln_m, kDenominator);
  t.thresholds.push_back(t.first);
  for (int i = 2; i <= m; ++i) {
    Rational v = FloorToDenominator(1.0 / (i * ln_m), kDenominator);
    t.thresholds.push_back(sgn(v) < 0 ? Rational(0) : v);
  }
  t.scaled_budget = 1 + t.first;
  Rational total = 0;
  for (const Rational& v : t.thresholds) total += v;
  if (total > t.scaled_budget) {
    throw std::logic_error("threshold sum exceeds the rescaled budget");
  }
  return t;
}

SetFunction BaLogLogApprox(const SetFunction& f) {
  const std::optional<BudgetAdditiveFit> fit = AsBudgetAdditive(f);
  if (!fit) throw std::domain_error("input is not budget-additive");
  if (sgn(fit->budget) <= 0) throw std::domain_error("budget must be > 0");
  const LogLogThresholds t = BaLogLogThresholds(f.m());
  const Rational up = t.scaled_budget / fit->budget;
  std::vector<Rational> scaled;
  for (const Rational& v : fit->values) scaled.push_back(v * up);
  return Scale(ThresholdGs(scaled, t.thresholds), 1 / up);
}

SetFunction BaLogApprox(const SetFunction& f) {
  const std::optional<BudgetAdditiveFit> fit = AsBudgetAdditive(f);
  if (!fit) throw std::domain_error("input is not budget-additive");
  if (sgn(fit->budget) <= 0) throw std::domain_error("budget must be > 0");
  const int m = f.m();
  int last = 0;
  while ((1 << last) < m) ++last;
  // Round each normalized value down to a power of two and record its class.
  std::vector<Rational> rounded(m);
  std::vector<int> cls(m);
  for (int j = 0; j < m; ++j) {
    const Rational u = fit->values[j] / fit->budget;
    if (sgn(u) <= 0) {
      rounded[j] = 0;
      cls[j] = last;
      continue;
    }
    int t = 0;
    Rational power = 1;
    while (power > u) {
      power /= 2;
      ++t;
    }
    rounded[j] = power;
    cls[j] = std::min(t, last);
  }
  const Rational divisor = last + 1;
  return SetFunction::Build(m, [&](Subset s) -> Rational {
    std::vector<Rational> class_sum(last + 1);
    for (int j : s.Items()) class_sum[cls[j]] += rounded[j];
    Rational total = 0;
    for (const Rational& c : class_sum) total += std::min(c, Rational(1));
    return total * fit->budget / divisor;
  });
}

SetFunction XosGrid(int q) {
  if (q < 2 || q * q > kMaxItems) {
    throw std::domain_error("grid size q must satisfy 2 <= q, q*q <= " +
                            std::to_string(kMaxItems));
  }
  return SetFunction::Build(q * q, [&](Subset s) {
    int best = 0;
    for (int g = 0; g < q; ++g) {
      best = std::max(best, (s & Subset(((uint32_t{1} << q) - 1) << (g * q)))
                                .size());
    }
    return Rational(best);
  });
}

SetFunction XosGridSubmodApprox(int q) {
  if (q < 2 || q * q > kMaxItems) {
    throw std::domain_error("grid size q must satisfy 2 <= q, q*q <= " +
                            std::to_string(kMaxItems));
  }
  const Rational high = MakeRational(2 * q, 2 * q - 1);
  return SetFunction::Build(q * q, [&](Subset s) -> Rational {
    const int size = s.size();
    if (size < q) return MakeRational(2 * size, 2 * q - 1);
    if (size > q) return high;
    uint32_t groups = 0;
    for (int j : s.Items()) groups |= uint32_t{1} << (j / q);
    return std::popcount(groups) == q ? Rational(1) : high;
  });
}

Rational CoverageRatioBound() { return MakeRational(791, 500); }

CoverageApproximation CoverageApproxBa(const SetFunction& f, int universe_size,
                                       uint64_t seed, const Rational& rho_hat,
                                       bool verify, int max_attempts) {
  if (rho_hat < CoverageRatioBound()) {
    throw std::domain_error("rho_hat must be at least 791/500");
  }
  if (universe_size < 1) throw std::domain_error("universe must be nonempty");
  const std::optional<BudgetAdditiveFit> fit = AsBudgetAdditive(f);
  if (!fit) throw std::domain_error("input is not budget-additive");
  if (sgn(fit->budget) <= 0) throw std::domain_error("budget must be > 0");
  const int m = f.m();
  std::vector<int> cover_size(m);
  for (int i = 0; i < m; ++i) {
    const Rational c = fit->values[i] * universe_size / fit->budget;
    if (c.get_den() != 1) {
      throw std::domain_error("v_i N / B is not an integer for item " +
                              std::to_string(i) + "; choose another N");
    }
    cover_size[i] = static_cast<int>(c.get_num().get_si());
  }
  CoverageApproximation out{rho_hat * fit->budget / universe_size,
                            universe_size,
                            {},
                            SetFunction::Zero(m),
                            0};
  Rng rng(seed);
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    out.attempts = attempt;
    out.covers.assign(m, {});
    std::vector<std::vector<uint64_t>> bits(m);
    const size_t words = (static_cast<size_t>(universe_size) + 63) / 64;
    for (int i = 0; i < m; ++i) {
      out.covers[i] = rng.Sample(universe_size, cover_size[i]);
      bits[i].assign(words, 0);
      for (int e : out.covers[i]) bits[i][e / 64] |= uint64_t{1} << (e % 64);
    }
    out.g = SetFunction::Build(m, [&](Subset s) -> Rational {
      std::vector<uint64_t> u(words, 0);
      for (int i : s.Items()) {
        for (size_t w = 0; w < words; ++w) u[w] |= bits[i][w];
      }
      int covered = 0;
      for (uint64_t w : u) covered += std::popcount(w);
      return out.element_weight * covered;
    });
    if (!verify) return out;
    bool ok = true;
    for (uint32_t mask = 0; ok && mask < f.table_size(); ++mask) {
      const Subset s(mask);
      ok = f(s) <= out.g(s) && out.g(s) <= rho_hat * f(s);
    }
    if (ok) return out;
  }
  throw std::runtime_error("coverage approximation failed verification after " +
                           std::to_string(max_attempts) +
                           " samples; increase N");
}

Matroid Matroid::Create(int ground_size, std::vector<Subset> independent) {
  if (ground_size < 0 || ground_size > kMaxMatroidSize) {
    throw std::invalid_argument("matroid ground set must have at most " +
                                std::to_string(kMaxMatroidSize) + " items");
  }
  const Subset ground = Subset::Full(ground_size);
  std::vector<bool> table(size_t{1} << ground_size, false);
  if (independent.empty()) {
    throw std::invalid_argument("matroid needs at least one independent set");
  }
  for (Subset s : independent) {
    if (!s.IsSubsetOf(ground)) {
      throw std::invalid_argument("independent set " +
                                  std::to_string(s.mask()) +
                                  " leaves the ground set");
    }
    table[s.mask()] = true;
  }
  std::vector<Subset> sets;
  for (uint32_t mask = 0; mask < table.size(); ++mask) {
    if (table[mask]) sets.push_back(Subset(mask));
  }
  for (Subset s : sets) {
    for (int j : s.Items()) {
      if (!table[s.Without(j).mask()]) {
        throw std::invalid_argument("not downward closed at set " +
                                    std::to_string(s.mask()));
      }
    }
  }
  for (Subset a : sets) {
    for (Subset b : sets) {
      if (a.size() >= b.size()) continue;
      bool extends = false;
      for (int j : (b - a).Items()) {
        if (table[a.With(j).mask()]) {
          extends = true;
          break;
        }
      }
      if (!extends) {
        throw std::invalid_argument("exchange property fails for sets " +
                                    std::to_string(a.mask()) + " and " +
                                    std::to_string(b.mask()));
      }
    }
  }
  return Matroid(ground_size, std::move(table));
}

Matroid Matroid::Uniform(int n, int rank) {
  std::vector<Subset> sets;
  for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
    if (std::popcount(mask) <= rank) sets.push_back(Subset(mask));
  }
  return Create(n, std::move(sets));
}

Matroid Matroid::Partition(const std::vector<int>& block_of,
                           const std::vector<int>& capacities) {
  const int n = static_cast<int>(block_of.size());
  for (int b : block_of) {
    if (b < 0 || b >= static_cast<int>(capacities.size())) {
      throw std::invalid_argument("item assigned to an unknown block");
    }
  }
  std::vector<Subset> sets;
  for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
    std::vector<int> used(capacities.size(), 0);
    bool ok = true;
    for (int j : Subset(mask).Items()) ok &= ++used[block_of[j]] <= capacities[block_of[j]];
    if (ok) sets.push_back(Subset(mask));
  }
  return Create(n, std::move(sets));
}

Matroid Matroid::Graphic(int num_vertices,
                         const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(edges.size());
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices) {
      throw std::invalid_argument("edge endpoint out of range");
    }
  }
  std::vector<Subset> sets;
  for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
    std::vector<int> parent(num_vertices);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool forest = true;
    for (int e : Subset(mask).Items()) {
      const int a = find(edges[e].first), b = find(edges[e].second);
      if (a == b) {
        forest = false;
        break;
      }
      parent[a] = b;
    }
    if (forest) sets.push_back(Subset(mask));
  }
  return Create(n, std::move(sets));
}

int Matroid::Rank(Subset s) const {
  int best = 0;
  ForEachSubset(s, [&](Subset t) {
    if (independent_[t.mask()]) best = std::max(best, t.size());
  });
  return best;
}

std::vector<Subset> Matroid::IndependentSets() const {
  std::vector<Subset> sets;
  for (uint32_t mask = 0; mask < independent_.size(); ++mask) {
    if (independent_[mask]) sets.push_back(Subset(mask));
  }
  return sets;
}

void BipartiteWeights::Validate() const {
  if (left < 1 || right < 0 || right > kMaxMatroidSize) {
    throw std::invalid_argument("bipartite sides out of range");
  }
  SetFunction::CheckGroundSize(left);
  if (weights.size() != static_cast<size_t>(left)) {
    throw std::invalid_argument("weight matrix needs one row per item");
  }
  for (const auto& row : weights) {
    if (row.size() != static_cast<size_t>(right)) {
      throw std::invalid_argument("weight row length differs from right side");
    }
  }
}

namespace {

// Maximum total weight of a matching from the items of S into the right
// side, over matchings whose matched right set passes `accept`.
template <typename Accept>
Rational BestMatching(const BipartiteWeights& w, Subset s, Accept&& accept) {
  const std::vector<int> items = s.Items();
  const size_t states = size_t{1} << w.right;
  enum : uint8_t { kUnknown, kNone, kKnown };
  // State (pos, used): best completion from item pos on with `used` taken.
  std::vector<uint8_t> status((items.size() + 1) * states, kUnknown);
  std::vector<Rational> value((items.size() + 1) * states);
  auto solve = [&](auto& self, size_t pos, uint32_t used) -> bool {
    const size_t key = pos * states + used;
    if (status[key] != kUnknown) return status[key] == kKnown;
    bool found = false;
    Rational best;
    if (pos == items.size()) {
      found = accept(Subset(used));
    } else {
      if (self(self, pos + 1, used)) {
        found = true;
        best = value[(pos + 1) * states + used];
      }
      for (int r = 0; r < w.right; ++r) {
        const auto& edge = w.weights[items[pos]][r];
        const uint32_t next = used | (uint32_t{1} << r);
        if (!edge || next == used || !self(self, pos + 1, next)) continue;
        Rational candidate = value[(pos + 1) * states + next] + *edge;
        if (!found || candidate > best) best = std::move(candidate);
        found = true;
      }
    }
    status[key] = found ? kKnown : kNone;
    if (found) value[key] = std::move(best);
    return found;
  };
  return solve(solve, 0, 0) ? value[0] : Rational(0);
}

}  // namespace

SetFunction Oxs(const BipartiteWeights& w) {
  w.Validate();
  return SetFunction::Build(w.left, [&](Subset s) {
    return BestMatching(w, s, [](Subset) { return true; });
  });
}

SetFunction Wmrf(const Matroid& matroid, const std::vector<Rational>& weights) {
  const int n = matroid.ground_size();
  if (weights.size() != static_cast<size_t>(n)) {
    throw std::invalid_argument("need one weight per matroid element");
  }
  for (const Rational& v : weights) {
    if (sgn(v) < 0) throw std::invalid_argument("weights must be >= 0");
  }
  std::vector<Rational> sums = SubsetSums(weights);
  std::vector<Rational> best(sums.size());
  for (uint32_t mask = 1; mask < best.size(); ++mask) {
    const Subset s(mask);
    if (matroid.IsIndependent(s)) {
      best[mask] = sums[mask];
      continue;
    }
    for (int j : s.Items()) best[mask] = std::max(best[mask], best[s.Without(j).mask()]);
  }
  return SetFunction(n, std::move(best));
}

SetFunction Rado(const BipartiteWeights& w, const Matroid& matroid) {
  w.Validate();
  if (matroid.ground_size() != w.right) {
    throw std::invalid_argument("matroid must live on the right side");
  }
  return SetFunction::Build(w.left, [&](Subset s) {
    return BestMatching(w, s,
                        [&](Subset used) { return matroid.IsIndependent(used); });
  });
}

SetFunction Mrs(const std::vector<std::pair<Matroid, Rational>>& parts) {
  if (parts.empty()) throw std::invalid_argument("need at least one matroid");
  const int n = parts.front().first.ground_size();
  for (const auto& [matroid, weight] : parts) {
    if (matroid.ground_size() != n) {
      throw std::invalid_argument("matroids must share the ground set");
    }
    if (sgn(weight) < 0) throw std::invalid_argument("weights must be >= 0");
  }
  return SetFunction::Build(n, [&](Subset s) {
    Rational total = 0;
    for (const auto& [matroid, weight] : parts) total += weight * matroid.Rank(s);
    return total;
  });
}

}  // namespace gsval
