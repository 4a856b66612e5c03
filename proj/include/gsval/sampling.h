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

// Seeded random instances. Everything here draws from Rng, whose output is
// fully specified (mt19937_64 plus explicit rejection sampling), so a seed
// reproduces the same functions on every platform.

#ifndef GSVAL_SAMPLING_H_
#define GSVAL_SAMPLING_H_

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gsval/constructions.h"
#include "gsval/rational.h"
#include "gsval/set_function.h"

namespace gsval {

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi].
  int64_t Uniform(int64_t lo, int64_t hi);
  bool Coin() { return Uniform(0, 1) == 1; }
  // Fisher-Yates.
  template <typename T>
  void Shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[static_cast<size_t>(Uniform(0, i - 1))]);
    }
  }
  // k distinct values from 0..n-1, increasing.
  std::vector<int> Sample(int n, int k);

 private:
  std::mt19937_64 engine_;
};

Rational RandomRational(Rng& rng, int64_t max_numerator, int64_t denominator);

Matroid RandomMatroid(Rng& rng, int n);
BipartiteWeights RandomBipartite(Rng& rng, int left, int right);

SetFunction RandomOxs(Rng& rng, int m);
SetFunction RandomUnitDemand(Rng& rng, int m);
SetFunction RandomWmrf(Rng& rng, int m);
SetFunction RandomRado(Rng& rng, int m);

// Monotone submodular with integer values in [0, max_value] per singleton:
// values are assigned by increasing set size within the interval allowed by
// monotonicity and submodularity against already assigned subsets; a draw
// with an empty interval restarts.
SetFunction RandomSubmodular(Rng& rng, int m, int max_value = 6);

struct LabeledFunction {
  std::string family;
  SetFunction f;
};

// GS functions on 3..max_m items: OXS, unit-demand, WMRF and Rado instances
// plus random submodular draws that pass the GS check, in a fixed rotation.
std::vector<LabeledFunction> GsCorpus(uint64_t seed, int count, int max_m = 5);

// Random submodular functions (not filtered).
std::vector<SetFunction> SubmodularCorpus(uint64_t seed, int count,
                                          int max_m = 5);

// A pair g <= f <= rho g with g GS: f is the maximum of g over all
// relabelings that permute items within the blocks of a random partition,
// so f is symmetric within each block; rho = max f / g.
struct SandwichPair {
  SetFunction g;
  SetFunction f;
  Rational rho;
};
SandwichPair RandomSandwichPair(Rng& rng, int m);

}  // namespace gsval

#endif  // GSVAL_SAMPLING_H_
