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

// Small named valuations used by reproductions and tests.

#ifndef GSVAL_FIXTURES_H_
#define GSVAL_FIXTURES_H_

#include <string>
#include <utility>
#include <vector>

#include "gsval/rational.h"
#include "gsval/set_function.h"

namespace gsval {

// Monotone submodular, not GS, on a, b, c, d. Max-symmetrizing a and b
// gives h(c|a) = 0 but h(c|da) = 1.
SetFunction NotSubmodularExample();

// Budget 2 over a, b, c with values (2, 2, 0) and (2, 0, 2). Both are SWS;
// their average is not.
std::pair<SetFunction, SetFunction> SwsAverageExample();

// f1 on a, b, c, d: BA(2, 1, 1; 2) on a, b, c, and d adds 0 except on {b}
// where it adds 1. f2 is additive with d worth 100. Both are SWS; their
// convolution is not.
std::pair<SetFunction, SetFunction> SwsConvolutionExample();

// budget_additive((1, 1, 2), 2), where the local ratio is exactly 3/4.
SetFunction LocalRatioExample();

// budget_additive((1, 1, 1, 2), 2).
SetFunction CoverageExample();

// A submodular non-GS valuation with prices at which the greedy demand
// procedure is strictly worse than the best bundle.
struct GreedyFailure {
  std::string name;
  SetFunction f;
  std::vector<Rational> prices;
};
std::vector<GreedyFailure> GreedyFailureExamples();

}  // namespace gsval

#endif  // GSVAL_FIXTURES_H_
