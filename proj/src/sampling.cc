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

#include "gsval/sampling.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gsval/classes.h"

namespace gsval {

int64_t Rng::Uniform(int64_t lo, int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty sampling range");
  const uint64_t range = static_cast<uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<int64_t>(engine_());
  // Draws below 2^64 mod range would bias the residues.
  const uint64_t reject_below = (0 - range) % range;
  while (true) {
    const uint64_t x = engine_();
    if (x >= reject_below) return lo + static_cast<int64_t>(x % range);
  }
}

std::vector<int> Rng::Sample(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("sample size out of range");
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < k; ++i) {
    std::swap(pool[i], pool[static_cast<size_t>(Uniform(i, n - 1))]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

Rational RandomRational(Rng& rng, int64_t max_numerator, int64_t denominator) {
  return MakeRational(rng.Uniform(0, max_numerator), denominator);
}

Matroid RandomMatroid(Rng& rng, int n) {
  switch (rng.Uniform(0, 2)) {
    case 0:
      return Matroid::Uniform(n, static_cast<int>(rng.Uniform(1, n)));
    case 1: {
      const int blocks = static_cast<int>(rng.Uniform(1, std::max(1, n - 1)));
      std::vector<int> block_of(n);
      for (int& b : block_of) b = static_cast<int>(rng.Uniform(0, blocks - 1));
      std::vector<int> caps(blocks);
      for (int& c : caps) c = static_cast<int>(rng.Uniform(1, 2));
      return Matroid::Partition(block_of, caps);
    }
    default: {
      const int vertices = static_cast<int>(rng.Uniform(2, 4));
      std::vector<std::pair<int, int>> edges;
      for (int e = 0; e < n; ++e) {
        edges.emplace_back(rng.Uniform(0, vertices - 1),
                           rng.Uniform(0, vertices - 1));
      }
      return Matroid::Graphic(vertices, edges);
    }
  }
}

BipartiteWeights RandomBipartite(Rng& rng, int left, int right) {
  BipartiteWeights w{left, right, {}};
  w.weights.assign(left, std::vector<std::optional<Rational>>(right));
  for (auto& row : w.weights) {
    for (auto& entry : row) {
      if (rng.Uniform(0, 2) != 0) entry = Rational(rng.Uniform(1, 6));
    }
  }
  return w;
}

SetFunction RandomOxs(Rng& rng, int m) {
  return Oxs(RandomBipartite(rng, m, static_cast<int>(rng.Uniform(1, m))));
}

SetFunction RandomUnitDemand(Rng& rng, int m) {
  std::vector<Rational> values(m);
  for (Rational& v : values) v = rng.Uniform(0, 6);
  return UnitDemand(values);
}

SetFunction RandomWmrf(Rng& rng, int m) {
  const Matroid matroid = RandomMatroid(rng, m);
  std::vector<Rational> weights(m);
  for (Rational& v : weights) v = rng.Uniform(0, 6);
  return Wmrf(matroid, weights);
}

SetFunction RandomRado(Rng& rng, int m) {
  const int right = static_cast<int>(rng.Uniform(1, m));
  const BipartiteWeights w = RandomBipartite(rng, m, right);
  return Rado(w, RandomMatroid(rng, right));
}

SetFunction RandomSubmodular(Rng& rng, int m, int max_value) {
  SetFunction::CheckGroundSize(m);
  const uint32_t n = uint32_t{1} << m;
  std::vector<int64_t> v(n, 0);
  while (true) {
    bool ok = true;
    // Increasing mask order visits every proper subset first.
    for (uint32_t mask = 1; ok && mask < n; ++mask) {
      const Subset s(mask);
      if (s.size() == 1) {
        v[mask] = rng.Uniform(0, max_value);
        continue;
      }
      const std::vector<int> items = s.Items();
      int64_t lo = 0;
      int64_t hi = INT64_MAX;
      for (size_t a = 0; a < items.size(); ++a) {
        const uint32_t without_a = s.Without(items[a]).mask();
        lo = std::max(lo, v[without_a]);
        for (size_t b = a + 1; b < items.size(); ++b) {
          const uint32_t without_b = s.Without(items[b]).mask();
          const uint32_t without_ab = Subset(without_a).Without(items[b]).mask();
          hi = std::min(hi, v[without_a] + v[without_b] - v[without_ab]);
        }
      }
      if (lo > hi) {
        ok = false;
        break;
      }
      v[mask] = rng.Uniform(lo, hi);
    }
    if (ok) break;
  }
  std::vector<Rational> values(v.begin(), v.end());
  return SetFunction(m, std::move(values));
}

namespace {

SetFunction RandomGsOfFamily(Rng& rng, int family, int m) {
  switch (family) {
    case 0:
      return RandomOxs(rng, m);
    case 1:
      return RandomUnitDemand(rng, m);
    case 2:
      return RandomWmrf(rng, m);
    case 3:
      return RandomRado(rng, m);
    default:
      while (true) {
        SetFunction f = RandomSubmodular(rng, m);
        if (SatisfiesTripletCondition(f)) return f;
      }
  }
}

constexpr const char* kFamilies[] = {"oxs", "unit-demand", "wmrf", "rado",
                                     "submodular-gs"};

}  // namespace

std::vector<LabeledFunction> GsCorpus(uint64_t seed, int count, int max_m) {
  Rng rng(seed);
  std::vector<LabeledFunction> out;
  for (int i = 0; i < count; ++i) {
    const int family = i % 5;
    const int m = static_cast<int>(rng.Uniform(3, max_m));
    out.push_back({kFamilies[family], RandomGsOfFamily(rng, family, m)});
  }
  return out;
}

std::vector<SetFunction> SubmodularCorpus(uint64_t seed, int count,
                                          int max_m) {
  Rng rng(seed);
  std::vector<SetFunction> out;
  for (int i = 0; i < count; ++i) {
    out.push_back(RandomSubmodular(rng, static_cast<int>(rng.Uniform(3, max_m))));
  }
  return out;
}

SandwichPair RandomSandwichPair(Rng& rng, int m) {
  SetFunction g = SetFunction::Zero(m);
  while (true) {
    g = RandomGsOfFamily(rng, static_cast<int>(rng.Uniform(0, 4)), m);
    bool positive = true;
    for (int j = 0; j < m; ++j) positive &= sgn(g(Subset::Single(j))) > 0;
    if (positive && IsMonotone(g)) break;
  }
  const int blocks = static_cast<int>(rng.Uniform(1, m));
  std::vector<int> block_of(m);
  for (int& b : block_of) b = static_cast<int>(rng.Uniform(0, blocks - 1));
  std::vector<Rational> f(g.values().begin(), g.values().end());
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool preserves = true;
    for (int i = 0; i < m; ++i) preserves &= block_of[perm[i]] == block_of[i];
    if (!preserves) continue;
    for (uint32_t mask = 1; mask < f.size(); ++mask) {
      uint32_t image = 0;
      for (int i : Subset(mask).Items()) image |= uint32_t{1} << perm[i];
      if (g(Subset(image)) > f[mask]) f[mask] = g(Subset(image));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  SandwichPair pair{g, SetFunction(m, std::move(f)), 1};
  for (uint32_t mask = 1; mask < g.table_size(); ++mask) {
    const Rational q = pair.f(Subset(mask)) / g(Subset(mask));
    if (q > pair.rho) pair.rho = q;
  }
  return pair;
}

}  // namespace gsval
