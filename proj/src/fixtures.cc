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

#include "gsval/fixtures.h"

#include "gsval/constructions.h"

namespace gsval {
namespace {

std::vector<Rational> Ints(std::initializer_list<int> values) {
  std::vector<Rational> out;
  for (int v : values) out.emplace_back(v);
  return out;
}

}  // namespace

SetFunction NotSubmodularExample() {
  // Masks: a = 1, b = 2, c = 4, d = 8.
  return SetFunction(
      4, Ints({0, 3, 2, 5, 1, 3, 3, 5, 2, 3, 4, 5, 3, 3, 5, 5}));
}

std::pair<SetFunction, SetFunction> SwsAverageExample() {
  return {BudgetAdditive(Ints({2, 2, 0}), 2),
          BudgetAdditive(Ints({2, 0, 2}), 2)};
}

std::pair<SetFunction, SetFunction> SwsConvolutionExample() {
  const SetFunction base = BudgetAdditive(Ints({2, 1, 1}), 2);
  constexpr int kD = 3;
  const SetFunction f1 = SetFunction::Build(4, [&](Subset s) {
    const Subset rest = s.Without(kD);
    Rational v = base(rest);
    if (s.contains(kD) && rest == Subset::Single(1)) v += 1;
    return v;
  });
  return {f1, Additive(Ints({0, 0, 0, 100}))};
}

SetFunction LocalRatioExample() { return BudgetAdditive(Ints({1, 1, 2}), 2); }

SetFunction CoverageExample() {
  return BudgetAdditive(Ints({1, 1, 1, 2}), 2);
}

std::vector<GreedyFailure> GreedyFailureExamples() {
  // Prices found by scanning the grid {0, 1/2, ..., 4}^m.
  const Rational half = MakeRational(1, 2);
  return {
      {"not-submodular-example", NotSubmodularExample(), {half, 0, 0, 0}},
      {"ba-2-1-1-budget-2", BudgetAdditive(Ints({2, 1, 1}), 2), {half, 0, 0}},
      {"local-ratio-example", LocalRatioExample(), {0, 0, half}},
      {"xos-grid-submodular-approx", XosGridSubmodApprox(2),
       {1, half, half, half}},
  };
}

}  // namespace gsval
