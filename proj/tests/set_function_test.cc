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

#include <algorithm>
#include <numeric>
#include <vector>

#include "gtest/gtest.h"
#include "gsval/constructions.h"
#include "gsval/sampling.h"

namespace gsval {
namespace {

SetFunction RandomTable(Rng& rng, int m) {
  return SetFunction::Build(m, [&](Subset s) {
    return s.empty() ? Rational(0) : MakeRational(rng.Uniform(-9, 9), 4);
  });
}

TEST(RationalTest, ParseCanonicalizes) {
  EXPECT_EQ(ToString(ParseRational("3/6")), "1/2");
  EXPECT_EQ(ToString(ParseRational("-4/2")), "-2");
  EXPECT_EQ(ToString(ParseRational("0/5")), "0");
  EXPECT_EQ(ToString(ParseRational("7")), "7");
}

TEST(RationalTest, ParseRejectsMalformed) {
  for (const char* bad : {"", "1/0", "a", "1/2/3", "1.5", "/3", "3/", " 1"}) {
    EXPECT_THROW(ParseRational(bad), std::invalid_argument) << bad;
  }
}

TEST(RationalTest, ArithmeticStaysInLowestTerms) {
  Rng rng(11);
  for (int t = 0; t < 500; ++t) {
    const Rational a = MakeRational(rng.Uniform(-50, 50), rng.Uniform(1, 30));
    const Rational b = MakeRational(rng.Uniform(-50, 50), rng.Uniform(1, 30));
    for (const Rational& r : {Rational(a + b), Rational(a - b),
                              Rational(a * b)}) {
      EXPECT_EQ(gcd(r.get_num(), r.get_den()), 1);
      EXPECT_GT(r.get_den(), 0);
      EXPECT_EQ(ParseRational(ToString(r)), r);
    }
    // Cross-multiplication agrees with the library order.
    EXPECT_EQ(a < b, a.get_num() * b.get_den() < b.get_num() * a.get_den());
  }
}

TEST(RationalTest, FloorToDenominatorIsLowerBound) {
  const Rational r = FloorToDenominator(0.5, 1000000);
  EXPECT_LT(r, MakeRational(1, 2));
  EXPECT_GE(r, MakeRational(499998, 1000000));
}

TEST(SubsetTest, Basics) {
  const Subset s = Subset::Of({0, 2, 5});
  EXPECT_EQ(s.mask(), 0b100101u);
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(1));
  EXPECT_EQ(s.First(), 0);
  EXPECT_EQ(s.Without(0).First(), 2);
  EXPECT_EQ((s - Subset::Of({2})).Items(), (std::vector<int>{0, 5}));
  EXPECT_TRUE(Subset::Of({2}).IsSubsetOf(s));
  int count = 0;
  ForEachSubset(s, [&](Subset t) {
    EXPECT_TRUE(t.IsSubsetOf(s));
    ++count;
  });
  EXPECT_EQ(count, 8);
}

TEST(SetFunctionTest, ConstructorValidates) {
  EXPECT_THROW(SetFunction(0, {Rational(0)}), std::invalid_argument);
  EXPECT_THROW(SetFunction(1, {Rational(0)}), std::invalid_argument);
  EXPECT_THROW(SetFunction(1, {Rational(1), Rational(1)}),
               std::invalid_argument);
  EXPECT_THROW(SetFunction(1, {Rational(0), Rational(1)}, {"a", "b"}),
               std::invalid_argument);
  EXPECT_THROW(SetFunction::Zero(kMaxItems + 1), std::invalid_argument);
  EXPECT_NO_THROW(SetFunction(1, {Rational(0), Rational(1)}, {"x"}));
}

TEST(SetFunctionTest, EvaluateChecksRange) {
  const SetFunction f = Additive({1, 2});
  EXPECT_EQ(f.Evaluate(Subset::Of({0, 1})), 3);
  EXPECT_THROW(f.Evaluate(Subset::Of({2})), std::domain_error);
}

TEST(SetFunctionTest, NamesAndFormatting) {
  const SetFunction f = Additive({1, 2, 3});
  EXPECT_EQ(f.ItemName(1), "b");
  EXPECT_EQ(f.FormatSubset(Subset::Of({0, 2})), "{a,c}");
  EXPECT_EQ(f.FormatSubset(Subset()), "{}");
  const SetFunction g(1, {Rational(0), Rational(1)}, {"apple"});
  EXPECT_EQ(g.FormatSubset(Subset::Of({0})), "{apple}");
}

TEST(SetFunctionTest, MarginalIdentity) {
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const int m = static_cast<int>(rng.Uniform(1, 5));
    const SetFunction f = RandomTable(rng, m);
    const uint32_t n = 1u << m;
    for (uint32_t a = 0; a < n; ++a) {
      for (uint32_t b = 0; b < n; ++b) {
        EXPECT_EQ(f.Marginal(Subset(a), Subset(b)),
                  f(Subset(a | b)) - f(Subset(b)));
      }
    }
  }
}

TEST(SetFunctionTest, SymmetryClassesOfLevels) {
  const SymmetryPartition p = SymmetryClasses(BudgetAdditiveLevels(2, 1));
  ASSERT_EQ(p.classes.size(), 2u);
  EXPECT_EQ(p.classes[0], Subset::Of({0}));
  EXPECT_EQ(p.classes[1], Subset::Of({1, 2}));
  EXPECT_EQ(p.ClassOf(2), 1);
  EXPECT_TRUE(AreSymmetric(BudgetAdditiveLevels(2, 1), 1, 2));
  EXPECT_FALSE(AreSymmetric(BudgetAdditiveLevels(2, 1), 0, 1));
}

TEST(SetFunctionTest, CoarseningRelation) {
  SymmetryPartition fine{{Subset::Of({0}), Subset::Of({1}), Subset::Of({2})}};
  SymmetryPartition coarse{{Subset::Of({0, 1}), Subset::Of({2})}};
  EXPECT_TRUE(coarse.IsCoarseningOf(fine));
  EXPECT_FALSE(fine.IsCoarseningOf(coarse));
  EXPECT_TRUE(coarse.IsCoarseningOf(coarse));
}

// Relabeling items maps symmetry classes to their images.
TEST(SetFunctionTest, SymmetryClassesFollowPermutations) {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const int m = static_cast<int>(rng.Uniform(2, 5));
    // A random function with a planted symmetric pair.
    SetFunction f = RandomTable(rng, m);
    if (rng.Coin()) {
      f = SetFunction::Build(m, [&](Subset s) {
        const bool has0 = s.contains(0), has1 = s.contains(1);
        const Subset base = s - Subset::Of({0, 1});
        if (has0 != has1) return f(base.With(0));
        return f(s);
      });
    }
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    rng.Shuffle(perm);
    const SetFunction g = PermuteItems(f, perm);
    const SymmetryPartition pf = SymmetryClasses(f);
    const SymmetryPartition pg = SymmetryClasses(g);
    ASSERT_EQ(pf.classes.size(), pg.classes.size());
    for (Subset c : pf.classes) {
      Subset image;
      for (int i : c.Items()) image = image.With(perm[i]);
      EXPECT_NE(std::find(pg.classes.begin(), pg.classes.end(), image),
                pg.classes.end());
    }
  }
}

TEST(SetFunctionTest, PermuteItemsRejectsNonPermutations) {
  const SetFunction f = Additive({1, 2, 3});
  EXPECT_THROW(PermuteItems(f, std::vector<int>{0, 0, 1}), std::domain_error);
  EXPECT_THROW(PermuteItems(f, std::vector<int>{0, 1}), std::domain_error);
}

TEST(SetFunctionTest, RestrictScaleTotalDummy) {
  const SetFunction f = Additive({1, 2, 4});
  const SetFunction r = Restrict(f, Subset::Of({0, 2}));
  EXPECT_EQ(r.m(), 2);
  EXPECT_EQ(r(Subset::Of({1})), 4);
  EXPECT_THROW(Restrict(f, Subset()), std::domain_error);
  EXPECT_EQ(Scale(f, MakeRational(1, 2))(Subset::Of({1})), 1);
  EXPECT_EQ(TotalValue(f), 28);
  const SetFunction d = AddDummyItem(f);
  EXPECT_EQ(d.m(), 4);
  EXPECT_EQ(d(Subset::Of({0, 3})), 1);
  EXPECT_TRUE(AreSymmetric(AddDummyItem(Additive({0, 5})), 0, 2));
}

}  // namespace
}  // namespace gsval
