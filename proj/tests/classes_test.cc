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

#include "gsval/classes.h"

#include <algorithm>
#include <vector>

#include "gtest/gtest.h"
#include "gsval/constructions.h"
#include "gsval/fixtures.h"
#include "gsval/sampling.h"

namespace gsval {
namespace {

// Independent re-evaluation of each checker's witness on the raw table.
bool MonotoneViolated(const SetFunction& f, const Witness& w) {
  return w.items.size() == 1 && f(w.set.With(w.items[0])) < f(w.set);
}

bool SubmodularViolated(const SetFunction& f, const Witness& w) {
  if (w.items.size() != 2) return false;
  const int j = w.items[0], k = w.items[1];
  return f.Marginal(Subset::Single(j), w.set.With(k)) >
         f.Marginal(Subset::Single(j), w.set);
}

bool TripletViolated(const SetFunction& f, const Witness& w) {
  if (w.items.size() != 3) return false;
  const Subset s = w.set;
  const int i = w.items[0], j = w.items[1], k = w.items[2];
  std::vector<Rational> sums = {
      f(s.With(i).With(k)) + f(s.With(j)),
      f(s.With(j).With(k)) + f(s.With(i)),
      f(s.With(i).With(j)) + f(s.With(k)),
  };
  std::sort(sums.begin(), sums.end());
  return sums[2] > sums[1];
}

bool SwsViolated(const SetFunction& f, const Witness& w) {
  if (w.items.size() != 3) return false;
  const int a = w.items[0], b = w.items[1], c = w.items[2];
  return AreSymmetric(f, a, b) &&
         f.Marginal(Subset::Single(a), w.set.With(c)) <
             f.Marginal(Subset::Single(a), w.set.With(b));
}

bool SubadditiveViolated(const SetFunction& f, const Witness& w) {
  return f(w.set | w.other) > f(w.set) + f(w.other);
}

bool GsWitnessValid(const SetFunction& f, const Witness& w) {
  return w.detail == "submodularity" ? SubmodularViolated(f, w)
                                     : TripletViolated(f, w);
}

std::vector<Rational> RandomPrices(Rng& rng, int m) {
  std::vector<Rational> p;
  for (int i = 0; i < m; ++i) p.push_back(RandomRational(rng, 24, 4));
  return p;
}

TEST(MonotoneTest, Examples) {
  EXPECT_TRUE(IsMonotone(Additive({1, 0, 3})));
  const SetFunction f(2, {0, 2, 1, 1});
  const CheckResult r = IsMonotone(f);
  ASSERT_FALSE(r);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(MonotoneViolated(f, *r.witness));
}

TEST(SubmodularTest, Examples) {
  EXPECT_TRUE(IsSubmodular(BudgetAdditive({2, 1, 1}, 2)));
  // Complements: f(ab) = 3 > f(a) + f(b).
  const SetFunction f(2, {0, 1, 1, 3});
  const CheckResult r = IsSubmodular(f);
  ASSERT_FALSE(r);
  EXPECT_TRUE(SubmodularViolated(f, *r.witness));
}

TEST(GrossSubstitutesTest, KnownMembers) {
  EXPECT_TRUE(IsGrossSubstitutes(Additive({1, 2, 3, 4})));
  EXPECT_TRUE(IsGrossSubstitutes(UnitDemand({1, 2, 3})));
  EXPECT_TRUE(IsGrossSubstitutes(Approx2Gs(3)));
  EXPECT_TRUE(IsGrossSubstitutes(ThresholdGs({5, 3}, {4, 2})));
}

TEST(GrossSubstitutesTest, BudgetAdditiveTwoOneOneIsNot) {
  // At S = {}: f(ab) + f(c) = f(ac) + f(b) = 3 but f(bc) + f(a) = 4.
  const SetFunction f = BudgetAdditive({2, 1, 1}, 2);
  const CheckResult r = IsGrossSubstitutes(f);
  ASSERT_FALSE(r);
  EXPECT_EQ(r.witness->detail, "triplet condition");
  EXPECT_TRUE(TripletViolated(f, *r.witness));
}

TEST(GrossSubstitutesTest, NotSubmodularExampleIsSubmodularButNotGs) {
  const SetFunction g = NotSubmodularExample();
  EXPECT_TRUE(IsMonotone(g));
  EXPECT_TRUE(IsSubmodular(g));
  const CheckResult r = IsGrossSubstitutes(g);
  ASSERT_FALSE(r);
  EXPECT_TRUE(GsWitnessValid(g, *r.witness));
}

TEST(GrossSubstitutesTest, NonSubmodularReportsSubmodularity) {
  const SetFunction f(2, {0, 1, 1, 3});
  const CheckResult r = IsGrossSubstitutes(f);
  ASSERT_FALSE(r);
  EXPECT_EQ(r.witness->detail, "submodularity");
  EXPECT_TRUE(GsWitnessValid(f, *r.witness));
}

TEST(AdditiveTest, Examples) {
  EXPECT_TRUE(IsAdditive(Additive({1, 2})));
  const CheckResult r = IsAdditive(UnitDemand({1, 2}));
  ASSERT_FALSE(r);
  EXPECT_EQ(r.witness->set, Subset::Of({0, 1}));
}

TEST(BudgetAdditiveTest, FitRecoversParameters) {
  const auto fit = AsBudgetAdditive(BudgetAdditive({2, 1, 1}, 2));
  ASSERT_TRUE(fit);
  EXPECT_EQ(fit->budget, 2);
  EXPECT_EQ(fit->values, (std::vector<Rational>{2, 1, 1}));
  EXPECT_FALSE(AsBudgetAdditive(UnitDemand({1, 2, 3})));
  EXPECT_TRUE(AsBudgetAdditive(Additive({1, 2, 3})));
}

TEST(XosTest, Examples) {
  EXPECT_TRUE(IsXos(XosGrid(2)));
  EXPECT_TRUE(IsXos(BudgetAdditive({2, 1, 1}, 2)));
  // Strict complements have no supporting clause at {a, b}.
  const SetFunction f(2, {0, 1, 1, 3});
  const CheckResult r = IsXos(f);
  ASSERT_FALSE(r);
  EXPECT_EQ(r.witness->set, Subset::Of({0, 1}));
  // Non-monotone functions are reported through their monotonicity witness.
  const SetFunction g(2, {0, 2, 1, 1});
  const CheckResult rg = IsXos(g);
  ASSERT_FALSE(rg);
  EXPECT_EQ(rg.witness->detail, "monotonicity");
  EXPECT_TRUE(MonotoneViolated(g, *rg.witness));
}

TEST(SubadditiveTest, Examples) {
  EXPECT_TRUE(IsSubadditive(XosGrid(2)));
  const SetFunction f(2, {0, 1, 1, 3});
  const CheckResult r = IsSubadditive(f);
  ASSERT_FALSE(r);
  EXPECT_TRUE(SubadditiveViolated(f, *r.witness));
}

TEST(MrfTest, Scale) {
  EXPECT_EQ(MrfScale(Wmrf(Matroid::Uniform(3, 2), {2, 2, 2})), 2);
  EXPECT_EQ(MrfScale(SetFunction::Zero(2)), 0);
  EXPECT_FALSE(MrfScale(Additive({1, 2})));
}

TEST(SwsTest, AverageExample) {
  const auto [f1, f2] = SwsAverageExample();
  EXPECT_TRUE(IsSymmetricWeakSubstitutes(f1));
  EXPECT_TRUE(IsSymmetricWeakSubstitutes(f2));
  const SetFunction avg = SetFunction::Build(
      3, [&](Subset s) -> Rational { return (f1(s) + f2(s)) / 2; });
  const CheckResult r = IsSymmetricWeakSubstitutes(avg);
  ASSERT_FALSE(r);
  EXPECT_TRUE(SwsViolated(avg, *r.witness));
}

TEST(LocalApproxTest, FixtureIsExactlyThreeQuarters) {
  EXPECT_EQ(LocalApproxRatio(LocalRatioExample()), MakeRational(3, 4));
}

TEST(LocalApproxTest, GsFunctionsHaveRatioOne) {
  for (const LabeledFunction& l : GsCorpus(21, 40)) {
    EXPECT_EQ(LocalApproxRatio(l.f), 1) << l.family;
  }
}

TEST(LocalApproxTest, RejectsNonSubmodular) {
  EXPECT_THROW(LocalApproxRatio(SetFunction(2, {0, 1, 1, 3})),
               std::domain_error);
}

TEST(LocalApproxTest, AtLeastThreeQuartersOnSubmodularSamples) {
  for (const SetFunction& f : SubmodularCorpus(31, 200)) {
    EXPECT_GE(LocalApproxRatio(f), MakeRational(3, 4));
  }
}

TEST(DemandTest, ValidatesPrices) {
  const SetFunction f = Additive({1, 2});
  EXPECT_THROW(DemandBruteForce(f, {1}), std::domain_error);
  EXPECT_THROW(DemandGreedy(f, {1, -1}), std::domain_error);
}

TEST(DemandTest, HighPricesDemandNothing) {
  const SetFunction f = BudgetAdditive({2, 1, 1}, 2);
  const DemandResult d = DemandBruteForce(f, {3, 3, 3});
  EXPECT_EQ(d.best_utility, 0);
  EXPECT_EQ(d.demanded, std::vector<Subset>{Subset()});
  const GreedyDemand g = DemandGreedy(f, {3, 3, 3});
  EXPECT_EQ(g.set, Subset());
  EXPECT_EQ(g.utility, 0);
}

TEST(DemandTest, BruteForceListsEveryMaximizer) {
  Rng rng(8);
  for (const SetFunction& f : SubmodularCorpus(9, 30, 4)) {
    const std::vector<Rational> p = RandomPrices(rng, f.m());
    const DemandResult d = DemandBruteForce(f, p);
    for (uint32_t mask = 0; mask < f.table_size(); ++mask) {
      Rational u = f(Subset(mask));
      for (int i : Subset(mask).Items()) u -= p[i];
      const bool listed = std::find(d.demanded.begin(), d.demanded.end(),
                                    Subset(mask)) != d.demanded.end();
      EXPECT_LE(u, d.best_utility);
      EXPECT_EQ(listed, u == d.best_utility);
    }
  }
}

TEST(DemandTest, ZeroMarginalItemsAreNotTaken) {
  const GreedyDemand g = DemandGreedy(Additive({1, 2}), {1, 0});
  EXPECT_EQ(g.set, Subset::Of({1}));
  EXPECT_EQ(g.utility, 2);
}

TEST(DemandTest, GreedyOptimalOnGs) {
  Rng rng(12);
  for (const LabeledFunction& l : GsCorpus(13, 100)) {
    for (int t = 0; t < 50; ++t) {
      const std::vector<Rational> p = RandomPrices(rng, l.f.m());
      ASSERT_EQ(DemandGreedy(l.f, p).utility,
                DemandBruteForce(l.f, p).best_utility)
          << l.family;
    }
  }
}

TEST(DemandTest, RecordedGreedyFailures) {
  for (const GreedyFailure& ex : GreedyFailureExamples()) {
    EXPECT_TRUE(IsSubmodular(ex.f)) << ex.name;
    EXPECT_FALSE(IsGrossSubstitutes(ex.f)) << ex.name;
    EXPECT_LT(DemandGreedy(ex.f, ex.prices).utility,
              DemandBruteForce(ex.f, ex.prices).best_utility)
        << ex.name;
  }
}

// GS => submodular => XOS => subadditive, GS => SWS, and every negative
// answer carries a witness that re-evaluates to a violation.
TEST(ClassifyTest, ContainmentChainAndWitnesses) {
  std::vector<SetFunction> fs;
  for (const LabeledFunction& l : GsCorpus(41, 60)) fs.push_back(l.f);
  for (const SetFunction& f : SubmodularCorpus(42, 60)) fs.push_back(f);
  fs.push_back(NotSubmodularExample());
  fs.push_back(XosGrid(2));
  fs.push_back(SetFunction(2, {0, 1, 1, 3}));
  fs.push_back(SetFunction(2, {0, 2, 1, 1}));
  for (const SetFunction& f : fs) {
    const ClassReport r = Classify(f);
    ASSERT_TRUE(r.xos);
    if (r.gs.holds) {
      EXPECT_TRUE(r.submodular.holds);
      EXPECT_TRUE(r.sws.holds);
    }
    if (r.submodular.holds && r.monotone.holds) EXPECT_TRUE(r.xos->holds);
    if (r.xos->holds) EXPECT_TRUE(r.subadditive.holds);
    if (!r.monotone.holds) EXPECT_TRUE(MonotoneViolated(f, *r.monotone.witness));
    if (!r.submodular.holds) {
      EXPECT_TRUE(SubmodularViolated(f, *r.submodular.witness));
    }
    if (!r.gs.holds) EXPECT_TRUE(GsWitnessValid(f, *r.gs.witness));
    if (!r.sws.holds) EXPECT_TRUE(SwsViolated(f, *r.sws.witness));
    if (!r.subadditive.holds) {
      EXPECT_TRUE(SubadditiveViolated(f, *r.subadditive.witness));
    }
  }
}

TEST(ClassifyTest, SkipsXosOnRequest) {
  EXPECT_FALSE(Classify(Additive({1, 2}), false).xos);
}

// The triplet condition against the demand oracle: on GS inputs greedy is
// optimal at every price on a grid, and on the rejected draws of the
// submodular sampler at least one grid price defeats it often enough to
// separate the two checkers.
TEST(GrossSubstitutesTest, AgreesWithGreedyOnPriceGrid) {
  int separated = 0, rejected = 0;
  for (const SetFunction& f : SubmodularCorpus(51, 120, 3)) {
    const bool gs = IsGrossSubstitutes(f).holds;
    bool greedy_always = true;
    const int m = f.m();
    int64_t total = 1;
    for (int i = 0; i < m; ++i) total *= 13;
    for (int64_t code = 0; code < total && greedy_always; ++code) {
      std::vector<Rational> p;
      for (int64_t c = code, i = 0; i < m; ++i, c /= 13) {
        p.push_back(MakeRational(c % 13, 2));
      }
      greedy_always =
          DemandGreedy(f, p).utility == DemandBruteForce(f, p).best_utility;
    }
    if (gs) {
      EXPECT_TRUE(greedy_always);
    } else {
      ++rejected;
      separated += !greedy_always;
    }
  }
  EXPECT_GT(rejected, 0);
  EXPECT_EQ(separated, rejected);
}

}  // namespace
}  // namespace gsval
