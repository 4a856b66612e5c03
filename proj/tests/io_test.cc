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

#include "gsval/io.h"

#include <algorithm>
#include <fstream>
#include <string>

#include "gtest/gtest.h"
#include "gsval/sampling.h"

namespace gsval {
namespace {

Json SmallValuation() {
  return Json::parse(R"({"m": 2, "values": ["0", "1", "1/2", "3/2"]})");
}

TEST(ValuationJsonTest, RoundTrip) {
  for (const SetFunction& f : SubmodularCorpus(12, 30)) {
    const SetFunction g = ValuationFromJson(Json::parse(ToJson(f).dump()));
    EXPECT_TRUE(std::ranges::equal(g.values(), f.values()));
    EXPECT_EQ(g.names(), f.names());
  }
  const SetFunction named(1, {Rational(0), MakeRational(7, 3)}, {"apple"});
  const Json j = ToJson(named);
  EXPECT_EQ(j["values"][1], "7/3");
  EXPECT_EQ(ValuationFromJson(j).names(), named.names());
}

TEST(ValuationJsonTest, RejectsMalformedInput) {
  auto reject = [](const std::string& field, const Json& value) {
    Json j = SmallValuation();
    j[field] = value;
    EXPECT_THROW(ValuationFromJson(j), std::invalid_argument)
        << field << "=" << value.dump();
  };
  reject("m", 3);
  reject("m", 0);
  reject("m", "2");
  reject("values", Json::array({"0", "1", "1/2"}));
  reject("values", Json::array({"0", "1", "3/6", "3/2"}));
  reject("values", Json::array({"1", "1", "1/2", "3/2"}));
  reject("values", Json::array({"0", 1, "1/2", "3/2"}));
  reject("values", Json::array({"0", "x", "1/2", "3/2"}));
  reject("names", Json::array({"a"}));
  reject("names", Json::array({"a", 2}));
  EXPECT_THROW(ValuationFromJson(Json::array()), std::invalid_argument);
  EXPECT_THROW(ValuationFromJson(Json::parse(R"({"m": 1})")),
               std::invalid_argument);
}

TEST(ValuationJsonTest, ErrorsNameTheField) {
  Json j = SmallValuation();
  j["values"][2] = "2/4";
  try {
    ValuationFromJson(j);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("values[2]"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("'1/2'"), std::string::npos);
  }
}

TEST(MatroidJsonTest, RoundTripAndValidation) {
  Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    const Matroid m = RandomMatroid(rng, 1 + t % 5);
    const Matroid back = MatroidFromJson(Json::parse(ToJson(m).dump()));
    EXPECT_EQ(back.ground_size(), m.ground_size());
    EXPECT_EQ(back.IndependentSets(), m.IndependentSets());
  }
  // {0} and {1} independent but not {} breaks the hereditary axiom.
  EXPECT_THROW(
      MatroidFromJson(Json::parse(R"({"n": 2, "independent": [1, 2]})")),
      std::invalid_argument);
  EXPECT_THROW(
      MatroidFromJson(Json::parse(R"({"n": 2, "independent": [0, -1]})")),
      std::invalid_argument);
}

TEST(NetworkJsonTest, RoundTripAndValidation) {
  InductionNetwork net;
  net.u_size = 2;
  net.inner = SetFunction(1, {Rational(0), Rational(1)});
  net.edges = {{0, 0, MakeRational(-1, 2)}, {1, 0, Rational(0)}};
  const InductionNetwork back = NetworkFromJson(ToJson(net));
  EXPECT_EQ(back.u_size, 2);
  ASSERT_EQ(back.edges.size(), 2u);
  EXPECT_EQ(back.edges[0].weight, MakeRational(-1, 2));
  EXPECT_TRUE(std::ranges::equal(back.inner.values(), net.inner.values()));

  Json bad = ToJson(net);
  bad["edges"][0] = Json::array({0, 5, "1"});
  EXPECT_THROW(NetworkFromJson(bad), std::invalid_argument);
  bad = ToJson(net);
  bad["v"] = 3;
  EXPECT_THROW(NetworkFromJson(bad), std::invalid_argument);
  bad = ToJson(net);
  bad["edges"][0] = Json::array({0, 0});
  EXPECT_THROW(NetworkFromJson(bad), std::invalid_argument);
}

TEST(ReportJsonTest, CertificateShape) {
  const SearchProblem p{kS1Items, S1FixedConstraints(), S1SufficientSet(2)};
  const Certificate c = TreeSearch(p, {}).certificate;
  const Json j = ToJson(p, c);
  EXPECT_EQ(j["result"], "infeasible");
  EXPECT_EQ(j["order"][0], FormatCombination(p.order[0]));
  EXPECT_EQ(j["pruned"].size(), c.pruned.size());
  EXPECT_EQ(j["lps_solved"], c.lps_solved);
  EXPECT_FALSE(j.contains("witness"));
}

TEST(FileIoTest, SaveLoadAndErrors) {
  const std::string path = testing::TempDir() + "/io_test_valuation.json";
  SaveJsonFile(path, SmallValuation());
  EXPECT_EQ(LoadJsonFile(path), SmallValuation());
  EXPECT_THROW(LoadJsonFile(path + ".missing"), std::runtime_error);
  {
    std::ofstream out(path);
    out << "{not json";
  }
  EXPECT_THROW(LoadJsonFile(path), std::runtime_error);
  EXPECT_THROW(SaveJsonFile("/nonexistent-dir/x.json", Json()),
               std::runtime_error);
}

}  // namespace
}  // namespace gsval
