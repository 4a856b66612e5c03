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

// Approximation ratios and related closed-form bounds.

#ifndef GSVAL_ANALYSIS_H_
#define GSVAL_ANALYSIS_H_

#include <optional>
#include <vector>

#include "gsval/rational.h"
#include "gsval/set_function.h"
#include "gsval/subset.h"

namespace gsval {

enum class GapMode {
  // g(S) <= f(S) <= ratio * g(S).
  kLower,
  // f(S) <= g(S) <= ratio * f(S).
  kUpper,
};

struct GapReport {
  // The sandwich's one-sided inequality holds everywhere.
  bool lower_ok = true;
  // Some set has a zero approximator value but a positive target, or vice
  // versa in kUpper mode.
  bool infinite = false;
  // Largest quotient over sets with a positive denominator; 1 if none.
  Rational ratio = 1;
  // Lowest mask attaining the ratio (or the first infinite set).
  Subset argmax;
  // Sets breaking the one-sided inequality, increasing by mask.
  std::vector<Subset> violations;
};

// kLower: ratio = max f(S)/g(S) over S with f(S) > 0; a set with
// f(S) = 0 must have g(S) = 0. kUpper: the same with the roles of the
// quotient flipped, ratio = max g(S)/f(S). Throws std::domain_error if the
// ground sets differ.
GapReport ApproximationRatio(const SetFunction& g, const SetFunction& f,
                             GapMode mode = GapMode::kLower);

struct BaNegativeBound {
  // (1/(d+1)) (1 + sum_{h=1..d} h k^(h-1) / k^d), an upper bound on 1/rho.
  Rational reciprocal;
  // Lower bound on the best ratio: 1 / reciprocal.
  Rational ratio;
  // 1/(d+1) + 1/(k-1).
  Rational simplified_reciprocal;
};

// Throws std::domain_error unless k >= 2 and d >= 1.
BaNegativeBound BaNegativeBoundFor(int k, int d);

// Whether g(B2 | C1) >= g(B2 | B1) with B2 = B \ B1. Throws
// std::domain_error unless B lies in one symmetry class of g, B1 is within
// B, |C1| = |B1| and C1 avoids B2.
bool LemmaKeyCheck(const SetFunction& g, Subset b, Subset b1, Subset c1);

struct LemmaKeyViolation {
  Subset b;
  Subset b1;
  Subset c1;
};

// Runs LemmaKeyCheck over every symmetry class B of g, every B1 within B
// and every admissible C1. Returns the first failure, if any.
std::optional<LemmaKeyViolation> LemmaKeyExhaustive(const SetFunction& g);

}  // namespace gsval

#endif  // GSVAL_ANALYSIS_H_
