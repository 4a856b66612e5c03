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

#include "gsval/analysis.h"

#include <stdexcept>

namespace gsval {

GapReport ApproximationRatio(const SetFunction& g, const SetFunction& f,
                             GapMode mode) {
  if (f.m() != g.m()) throw std::domain_error("ground set sizes differ");
  GapReport report;
  bool have_ratio = false;
  auto mark_infinite = [&](Subset s) {
    if (!report.infinite) {
      report.infinite = true;
      report.argmax = s;
    }
  };
  for (uint32_t mask = 0; mask < f.table_size(); ++mask) {
    const Subset s(mask);
    const Rational& target = f(s);
    const Rational& approx = g(s);
    std::optional<Rational> quotient;
    if (mode == GapMode::kLower) {
      if (approx > target || (sgn(target) == 0 && sgn(approx) != 0)) {
        report.violations.push_back(s);
      }
      if (sgn(target) > 0) {
        if (sgn(approx) <= 0) {
          mark_infinite(s);
        } else {
          quotient = target / approx;
        }
      }
    } else {
      if (approx < target) report.violations.push_back(s);
      if (sgn(target) == 0 && sgn(approx) != 0) mark_infinite(s);
      if (sgn(target) > 0) quotient = approx / target;
    }
    if (quotient && (!have_ratio || *quotient > report.ratio)) {
      report.ratio = std::move(*quotient);
      if (!report.infinite) report.argmax = s;
      have_ratio = true;
    }
  }
  report.lower_ok = report.violations.empty();
  return report;
}

BaNegativeBound BaNegativeBoundFor(int k, int d) {
  if (k < 2 || d < 1) throw std::domain_error("bound needs k >= 2, d >= 1");
  mpz_class k_to_d = 1;
  for (int h = 0; h < d; ++h) k_to_d *= k;
  Rational sum = 1;
  mpz_class k_power = 1;  // k^(h-1)
  for (int h = 1; h <= d; ++h) {
    sum += Rational(mpz_class(h) * k_power, k_to_d);
    k_power *= k;
  }
  sum.canonicalize();
  BaNegativeBound out;
  out.reciprocal = sum / (d + 1);
  out.ratio = 1 / out.reciprocal;
  out.simplified_reciprocal =
      Rational(1) / (d + 1) + Rational(1) / Rational(k - 1);
  return out;
}

bool LemmaKeyCheck(const SetFunction& g, Subset b, Subset b1, Subset c1) {
  const Subset ground = g.ground();
  if (!b.IsSubsetOf(ground) || !c1.IsSubsetOf(ground)) {
    throw std::domain_error("sets leave the ground set");
  }
  if (!b.empty()) {
    const SymmetryPartition partition = SymmetryClasses(g);
    const int cls = partition.ClassOf(b.First());
    if (!b.IsSubsetOf(partition.classes[cls])) {
      throw std::domain_error("B must lie in one symmetry class");
    }
  }
  if (!b1.IsSubsetOf(b)) throw std::domain_error("B1 must be a subset of B");
  const Subset b2 = b - b1;
  if (c1.size() != b1.size()) throw std::domain_error("|C1| must equal |B1|");
  if (!(c1 & b2).empty()) throw std::domain_error("C1 must avoid B2");
  return g.Marginal(b2, c1) >= g.Marginal(b2, b1);
}

std::optional<LemmaKeyViolation> LemmaKeyExhaustive(const SetFunction& g) {
  const SymmetryPartition partition = SymmetryClasses(g);
  std::optional<LemmaKeyViolation> found;
  for (Subset cls : partition.classes) {
    ForEachSubset(cls, [&](Subset b) {
      if (found) return;
      ForEachSubset(b, [&](Subset b1) {
        if (found) return;
        const Subset b2 = b - b1;
        ForEachSubset(g.ground() - b2, [&](Subset c1) {
          if (found || c1.size() != b1.size()) return;
          if (g.Marginal(b2, c1) < g.Marginal(b2, b1)) {
            found = LemmaKeyViolation{b, b1, c1};
          }
        });
      });
    });
  }
  return found;
}

}  // namespace gsval
