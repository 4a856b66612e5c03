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

#include "gsval/reproduce.h"

#include <functional>
#include <stdexcept>

#include "gsval/analysis.h"
#include "gsval/certify.h"
#include "gsval/classes.h"
#include "gsval/constructions.h"
#include "gsval/fixtures.h"
#include "gsval/transforms.h"

namespace gsval {
namespace {

class Checker {
 public:
  explicit Checker(std::string id) { report_.id = std::move(id); }

  void Expect(std::string description, bool pass, std::string detail = "") {
    report_.checks.push_back(
        {std::move(description), pass, std::move(detail)});
  }
  void ExpectEq(std::string description, const Rational& got,
                const Rational& want) {
    Expect(std::move(description), got == want,
           "got " + ToString(got) + ", want " + ToString(want));
  }

  ClaimReport Finish() {
    report_.pass = !report_.checks.empty();
    for (const ClaimCheck& c : report_.checks) report_.pass &= c.pass;
    return std::move(report_);
  }

 private:
  ClaimReport report_;
};

std::string Verdict(const Certificate& c) {
  return std::string(c.feasible ? "feasible" : "infeasible") + ", " +
         std::to_string(c.lps_solved) + " LPs, depth " +
         std::to_string(c.max_depth);
}

ClaimReport RemarkNotSubmodular(const ReproduceOptions&) {
  Checker check("remark-notsubmodular");
  const SetFunction g = NotSubmodularExample();
  check.Expect("g is monotone", IsMonotone(g).holds);
  check.Expect("g is submodular", IsSubmodular(g).holds);
  check.Expect("g is not GS", !IsGrossSubstitutes(g).holds);
  const SetFunction h = MaxSymmetrize(g, 0, 1);
  constexpr int a = 0, c = 2, d = 3;
  check.ExpectEq("h(c|a)", h.Marginal(Subset::Of({c}), Subset::Of({a})), 0);
  check.ExpectEq("h(c|da)", h.Marginal(Subset::Of({c}), Subset::Of({d, a})),
                 1);
  check.Expect("h is not submodular", !IsSubmodular(h).holds);
  return check.Finish();
}

ClaimReport InfeasibleSet(const std::string& id, int which,
                          const ReproduceOptions& options) {
  Checker check(id);
  SearchProblem problem{kS1Items, S1FixedConstraints(),
                        S1SufficientSet(which)};
  SearchOptions search;
  search.jobs = options.jobs;
  const SearchResult r = TreeSearch(problem, search);
  check.Expect("tree search is infeasible", !r.certificate.feasible,
               Verdict(r.certificate));
  check.Expect("at most 729 LPs", r.certificate.lps_solved <= 729,
               std::to_string(r.certificate.lps_solved));
  check.Expect("certificate replays",
               ReplayCertificate(problem, r.certificate, false));
  return check.Finish();
}

ClaimReport InfeasibleFull(const ReproduceOptions& options) {
  Checker check("claim-infeasible-full");
  SearchProblem problem{kS1Items, S1FixedConstraints(), S1DefaultOrder()};
  SearchOptions search;
  search.jobs = options.jobs;
  const SearchResult r = TreeSearch(problem, search);
  check.Expect("40-combination search is infeasible",
               !r.certificate.feasible && !r.exhausted,
               Verdict(r.certificate));
  check.Expect("certificate replays",
               ReplayCertificate(problem, r.certificate, false));
  return check.Finish();
}

void CheckK(int k, int max_k) {
  if (k < 2 || k > max_k) {
    throw std::invalid_argument("k must be between 2 and " +
                                std::to_string(max_k));
  }
}

ClaimReport Approx2(const ReproduceOptions& options) {
  CheckK(options.k, 10);
  const int k = options.k;
  Checker check("approx2");
  const SetFunction g = Approx2Gs(k);
  const SetFunction f = BudgetAdditiveLevels(k, 1);
  check.Expect("g is GS", IsGrossSubstitutes(g).holds);
  const GapReport gap = ApproximationRatio(g, f);
  check.Expect("g <= f", gap.lower_ok && !gap.infinite);
  check.ExpectEq("ratio", gap.ratio, MakeRational(2 * k, k + 1));
  return check.Finish();
}

ClaimReport BaGap(const ReproduceOptions& options) {
  CheckK(options.k, 3);
  const int k = options.k;
  Checker check("ba-gap");
  const SetFunction f = BudgetAdditiveLevels(k, 1);
  const Rational rho = MakeRational(2 * k, k + 1);
  const GapCertificate below =
      GsGapCertifier(f, rho - MakeRational(1, 100), true, options.jobs);
  check.Expect("no GS within 2k/(k+1) - 1/100", !below.certificate.feasible,
               Verdict(below.certificate));
  check.Expect("infeasible certificate replays",
               ReplayCertificate(below.problem, below.certificate, false));
  const GapCertificate at = GsGapCertifier(f, rho, true, options.jobs);
  check.Expect("a GS function within 2k/(k+1) exists",
               at.certificate.feasible, Verdict(at.certificate));
  if (at.witness_ratio) {
    check.Expect("witness ratio <= 2k/(k+1)", *at.witness_ratio <= rho,
                 ToString(*at.witness_ratio));
  }
  return check.Finish();
}

ClaimReport BaNegativeBoundTable(const ReproduceOptions&) {
  Checker check("ba-negative-bound");
  check.ExpectEq("rho(2,1)", BaNegativeBoundFor(2, 1).ratio,
                 MakeRational(4, 3));
  check.ExpectEq("rho(3,1)", BaNegativeBoundFor(3, 1).ratio,
                 MakeRational(3, 2));
  check.ExpectEq("rho(3,2)", BaNegativeBoundFor(3, 2).ratio,
                 MakeRational(27, 16));
  bool simplified = true;
  for (int k = 2; k <= 10; ++k) {
    for (int d = 1; d <= 10; ++d) {
      const BaNegativeBound b = BaNegativeBoundFor(k, d);
      simplified &= b.reciprocal < b.simplified_reciprocal;
    }
  }
  check.Expect("reciprocal < 1/(d+1) + 1/(k-1) for k, d <= 10", simplified);
  return check.Finish();
}

ClaimReport LocalApprox(const ReproduceOptions&) {
  Checker check("local-approx");
  check.ExpectEq("local ratio of budget_additive((1,1,2), 2)",
                 LocalApproxRatio(LocalRatioExample()), MakeRational(3, 4));
  return check.Finish();
}

ClaimReport XosGridClaim(const ReproduceOptions& options) {
  Checker check("xos-grid");
  const SetFunction f = XosGrid(2);
  check.Expect("f is XOS", IsXos(f).holds);
  check.Expect("f is not submodular", !IsSubmodular(f).holds);
  const SetFunction g = XosGridSubmodApprox(2);
  check.Expect("approximator is submodular", IsSubmodular(g).holds);
  const GapReport gap = ApproximationRatio(g, f);
  check.Expect("approximator <= f", gap.lower_ok && !gap.infinite);
  check.ExpectEq("approximator ratio", gap.ratio, MakeRational(3, 2));
  const GapCertificate cert =
      GsGapCertifier(f, 2 - MakeRational(1, 100), true, options.jobs);
  check.Expect("no GS within 2 - 1/100", !cert.certificate.feasible,
               Verdict(cert.certificate));
  return check.Finish();
}

ClaimReport SwsClosure(const ReproduceOptions&) {
  Checker check("sws-closure");
  const auto [f1, f2] = SwsAverageExample();
  check.Expect("average parts are SWS",
               IsSymmetricWeakSubstitutes(f1).holds &&
                   IsSymmetricWeakSubstitutes(f2).holds);
  check.Expect("average is not SWS",
               !IsSymmetricWeakSubstitutes(Average(f1, f2)).holds);
  const auto [c1, c2] = SwsConvolutionExample();
  check.Expect("convolution parts are SWS",
               IsSymmetricWeakSubstitutes(c1).holds &&
                   IsSymmetricWeakSubstitutes(c2).holds);
  check.Expect("convolution is not SWS",
               !IsSymmetricWeakSubstitutes(Convolve(c1, c2)).holds);
  return check.Finish();
}

ClaimReport CoverageBa(const ReproduceOptions& options) {
  Checker check("coverage-ba");
  const SetFunction f = CoverageExample();
  const Rational rho = CoverageRatioBound();
  try {
    const CoverageApproximation approx =
        CoverageApproxBa(f, 200, options.seed, rho, true, 10);
    const GapReport gap = ApproximationRatio(approx.g, f, GapMode::kUpper);
    check.Expect("f <= g <= (791/500) f", gap.lower_ok && !gap.infinite &&
                                              gap.ratio <= rho,
                 "ratio " + ToString(gap.ratio) + " after " +
                     std::to_string(approx.attempts) + " attempt(s)");
  } catch (const std::runtime_error& e) {
    check.Expect("f <= g <= (791/500) f within 10 samples", false, e.what());
  }
  return check.Finish();
}

ClaimReport ThresholdExample(const ReproduceOptions&) {
  Checker check("threshold-example");
  const SetFunction h = ThresholdGs({5, 3}, {4, 2});
  check.ExpectEq("h({0})", h(Subset::Of({0})), 4);
  check.ExpectEq("h({1})", h(Subset::Of({1})), 3);
  check.ExpectEq("h({0,1})", h(Subset::Of({0, 1})), 6);
  check.Expect("h is GS", IsGrossSubstitutes(h).holds);
  return check.Finish();
}

using ClaimFn = std::function<ClaimReport(const ReproduceOptions&)>;

const std::vector<std::pair<ClaimInfo, ClaimFn>>& Registry() {
  static const auto* registry = new std::vector<std::pair<ClaimInfo, ClaimFn>>{
      {{"remark-notsubmodular",
        "max-symmetrizing a monotone submodular non-GS g breaks "
        "submodularity"},
       RemarkNotSubmodular},
      {{"claim-infeasible-set1",
        "first published 6-combination set closes the S1 tree"},
       [](const ReproduceOptions& o) {
         return InfeasibleSet("claim-infeasible-set1", 1, o);
       }},
      {{"claim-infeasible-set2",
        "second published 6-combination set closes the S1 tree"},
       [](const ReproduceOptions& o) {
         return InfeasibleSet("claim-infeasible-set2", 2, o);
       }},
      {{"claim-infeasible-full", "the 40-combination S1 tree is infeasible"},
       InfeasibleFull},
      {{"approx2", "GS approximates BA(k,1) within 2k/(k+1) (--k)"}, Approx2},
      {{"ba-gap", "no GS approximates BA(k,1) better than 2k/(k+1) (--k <= 3)"},
       BaGap},
      {{"ba-negative-bound", "closed-form lower bounds for BA(k,d)"},
       BaNegativeBoundTable},
      {{"local-approx", "local ratio 3/4 on budget_additive((1,1,2), 2)"},
       LocalApprox},
      {{"xos-grid", "XOS grid q=2: submodular ratio 3/2, GS ratio 2"},
       XosGridClaim},
      {{"sws-closure", "SWS is closed under neither average nor convolution"},
       SwsClosure},
      {{"coverage-ba", "coverage approximation of a BA function (--seed)"},
       CoverageBa},
      {{"threshold-example", "threshold construction on g=(5,3), T=(4,2)"},
       ThresholdExample},
  };
  return *registry;
}

}  // namespace

std::vector<ClaimInfo> Claims() {
  std::vector<ClaimInfo> out;
  for (const auto& [info, fn] : Registry()) out.push_back(info);
  return out;
}

ClaimReport Reproduce(const std::string& id, const ReproduceOptions& options) {
  for (const auto& [info, fn] : Registry()) {
    if (info.id == id) return fn(options);
  }
  throw std::invalid_argument("unknown claim '" + id + "'");
}

}  // namespace gsval
