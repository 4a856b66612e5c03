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

#include <fstream>
#include <stdexcept>

namespace gsval {
namespace {

[[noreturn]] void Fail(const std::string& where, const std::string& what) {
  throw std::invalid_argument(where + ": " + what);
}

const Json& Field(const Json& j, const char* name, const std::string& where) {
  if (!j.is_object()) Fail(where, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) Fail(where, std::string("missing field '") + name + "'");
  return *it;
}

int IntField(const Json& j, const char* name, const std::string& where) {
  const Json& v = Field(j, name, where);
  if (!v.is_number_integer()) Fail(where + "." + name, "expected an integer");
  return v.get<int>();
}

Rational RationalFrom(const Json& v, const std::string& where) {
  if (!v.is_string()) Fail(where, "expected a rational string");
  const std::string text = v.get<std::string>();
  Rational r;
  try {
    r = ParseRational(text);
  } catch (const std::invalid_argument& e) {
    Fail(where, e.what());
  }
  if (ToString(r) != text) {
    Fail(where, "'" + text + "' is not canonical (expected '" + ToString(r) +
                    "')");
  }
  return r;
}

}  // namespace

Json SubsetToJson(Subset s) { return Json(s.Items()); }

Json ToJson(const SetFunction& f) {
  Json j;
  j["m"] = f.m();
  if (!f.names().empty()) j["names"] = f.names();
  Json values = Json::array();
  for (const Rational& v : f.values()) values.push_back(ToString(v));
  j["values"] = std::move(values);
  return j;
}

SetFunction ValuationFromJson(const Json& j) {
  const std::string where = "valuation";
  const int m = IntField(j, "m", where);
  if (m < 1 || m > kMaxItems) {
    Fail(where + ".m", "must be between 1 and " + std::to_string(kMaxItems));
  }
  const Json& values = Field(j, "values", where);
  if (!values.is_array()) Fail(where + ".values", "expected an array");
  const size_t n = size_t{1} << m;
  if (values.size() != n) {
    Fail(where + ".values", "expected " + std::to_string(n) +
                                " entries, got " +
                                std::to_string(values.size()));
  }
  std::vector<Rational> table(n);
  for (size_t k = 0; k < n; ++k) {
    table[k] = RationalFrom(values[k], where + ".values[" +
                                           std::to_string(k) + "]");
  }
  if (sgn(table[0]) != 0) Fail(where + ".values[0]", "must be \"0\"");
  std::vector<std::string> names;
  if (auto it = j.find("names"); it != j.end()) {
    if (!it->is_array() || it->size() != static_cast<size_t>(m)) {
      Fail(where + ".names", "expected an array of " + std::to_string(m) +
                                 " strings");
    }
    for (size_t i = 0; i < it->size(); ++i) {
      if (!(*it)[i].is_string()) {
        Fail(where + ".names[" + std::to_string(i) + "]", "expected a string");
      }
      names.push_back((*it)[i].get<std::string>());
    }
  }
  return SetFunction(m, std::move(table), std::move(names));
}

Json ToJson(const Matroid& matroid) {
  Json independent = Json::array();
  for (Subset s : matroid.IndependentSets()) independent.push_back(s.mask());
  return {{"n", matroid.ground_size()}, {"independent", independent}};
}

Matroid MatroidFromJson(const Json& j) {
  const std::string where = "matroid";
  const int n = IntField(j, "n", where);
  if (n < 0 || n > kMaxMatroidSize) {
    Fail(where + ".n", "must be between 0 and " +
                           std::to_string(kMaxMatroidSize));
  }
  const Json& list = Field(j, "independent", where);
  if (!list.is_array()) Fail(where + ".independent", "expected an array");
  std::vector<Subset> sets;
  for (size_t k = 0; k < list.size(); ++k) {
    if (!list[k].is_number_unsigned()) {
      Fail(where + ".independent[" + std::to_string(k) + "]",
           "expected a nonnegative mask");
    }
    sets.push_back(Subset(list[k].get<uint32_t>()));
  }
  try {
    return Matroid::Create(n, std::move(sets));
  } catch (const std::invalid_argument& e) {
    Fail(where, e.what());
  }
}

Json ToJson(const InductionNetwork& net) {
  Json edges = Json::array();
  for (const NetworkEdge& e : net.edges) {
    edges.push_back(Json::array({e.u, e.v, ToString(e.weight)}));
  }
  return {{"u", net.u_size},
          {"v", net.v_size()},
          {"edges", edges},
          {"inner", ToJson(net.inner)}};
}

InductionNetwork NetworkFromJson(const Json& j) {
  const std::string where = "network";
  InductionNetwork net;
  net.u_size = IntField(j, "u", where);
  const int v = IntField(j, "v", where);
  net.inner = ValuationFromJson(Field(j, "inner", where));
  if (net.inner.m() != v) {
    Fail(where + ".v", "does not match inner.m");
  }
  const Json& edges = Field(j, "edges", where);
  if (!edges.is_array()) Fail(where + ".edges", "expected an array");
  for (size_t k = 0; k < edges.size(); ++k) {
    const std::string at = where + ".edges[" + std::to_string(k) + "]";
    const Json& e = edges[k];
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      Fail(at, "expected [u, v, \"weight\"]");
    }
    net.edges.push_back(
        {e[0].get<int>(), e[1].get<int>(), RationalFrom(e[2], at + "[2]")});
  }
  try {
    net.Validate();
  } catch (const std::domain_error& e) {
    Fail(where, e.what());
  }
  return net;
}

Json ToJson(const CheckResult& result) {
  Json j;
  j["holds"] = result.holds;
  if (result.witness) {
    const Witness& w = *result.witness;
    Json wj;
    wj["set"] = SubsetToJson(w.set);
    wj["items"] = w.items;
    if (!w.other.empty()) wj["other"] = SubsetToJson(w.other);
    if (!w.detail.empty()) wj["detail"] = w.detail;
    j["witness"] = std::move(wj);
  }
  return j;
}

Json ToJson(const ClassReport& report) {
  Json j;
  j["normalized"] = report.normalized;
  j["monotone"] = ToJson(report.monotone);
  j["additive"] = ToJson(report.additive);
  if (report.budget_additive) {
    Json values = Json::array();
    for (const Rational& v : report.budget_additive->values) {
      values.push_back(ToString(v));
    }
    j["budget_additive"] = {{"holds", true},
                            {"values", values},
                            {"budget", ToString(report.budget_additive->budget)}};
  } else {
    j["budget_additive"] = {{"holds", false}};
  }
  j["submodular"] = ToJson(report.submodular);
  j["gs"] = ToJson(report.gs);
  j["sws"] = ToJson(report.sws);
  if (report.xos) j["xos"] = ToJson(*report.xos);
  j["subadditive"] = ToJson(report.subadditive);
  if (report.mrf_scale) {
    j["mrf"] = {{"holds", true}, {"scale", ToString(*report.mrf_scale)}};
  } else {
    j["mrf"] = {{"holds", false}};
  }
  return j;
}

Json ToJson(const GapReport& report) {
  Json violations = Json::array();
  for (Subset s : report.violations) violations.push_back(SubsetToJson(s));
  return {{"lower_ok", report.lower_ok},
          {"infinite", report.infinite},
          {"ratio", ToString(report.ratio)},
          {"argmax", SubsetToJson(report.argmax)},
          {"violations", violations}};
}

Json ToJson(const LinExpr& expr) {
  Json terms = Json::array();
  for (const auto& [var, coef] : expr.terms()) {
    terms.push_back(Json::array({var, ToString(coef)}));
  }
  return {{"terms", terms}, {"constant", ToString(expr.constant())}};
}

Json ToJson(const LPProblem& problem) {
  Json constraints = Json::array();
  for (const Constraint& c : problem.constraints) {
    const char* rel = c.relation == Relation::kEq   ? "=="
                      : c.relation == Relation::kLe ? "<="
                                                    : ">=";
    constraints.push_back({{"expr", ToJson(c.expr)}, {"relation", rel}});
  }
  Json j = {{"num_vars", problem.num_vars}, {"constraints", constraints}};
  if (problem.objective) {
    j["objective"] = {
        {"expr", ToJson(problem.objective->expr)},
        {"sense", problem.objective->sense == Sense::kMaximize ? "max"
                                                                : "min"}};
  }
  auto bounds = [](const std::vector<std::optional<Rational>>& b) {
    Json out = Json::array();
    for (const auto& v : b) out.push_back(v ? Json(ToString(*v)) : Json());
    return out;
  };
  if (!problem.lower_bounds.empty()) j["lower"] = bounds(problem.lower_bounds);
  if (!problem.upper_bounds.empty()) j["upper"] = bounds(problem.upper_bounds);
  return j;
}

Json ToJson(const LPOutcome& outcome) {
  Json j = {{"status", ToString(outcome.status)}, {"pivots", outcome.pivots}};
  if (outcome.status == LPStatus::kFeasible) {
    Json x = Json::array();
    for (const Rational& v : outcome.witness) x.push_back(ToString(v));
    j["witness"] = std::move(x);
  }
  if (outcome.objective_value) {
    j["objective"] = ToString(*outcome.objective_value);
  }
  return j;
}

Json ToJson(const SearchProblem& problem, const Certificate& certificate) {
  Json order = Json::array();
  for (const Combination& c : problem.order) {
    order.push_back(FormatCombination(c));
  }
  Json pruned = Json::array();
  for (const PrunedNode& node : certificate.pruned) {
    pruned.push_back(
        {{"levels", node.levels},
         {"path", node.path},
         {"status", "infeasible"},
         {"pivots", node.pivots}});
  }
  Json j = {{"result", certificate.feasible ? "feasible" : "infeasible"},
            {"m", problem.m},
            {"fixed_constraints", problem.fixed.size()},
            {"order", order},
            {"max_depth", certificate.max_depth},
            {"pruned", pruned},
            {"lps_solved", certificate.lps_solved},
            {"nodes_visited", certificate.nodes_visited}};
  if (certificate.feasible && certificate.witness) {
    j["witness"] = ToJson(*certificate.witness);
    j["branch_levels"] = certificate.branch_levels;
    j["branch_path"] = certificate.branch_path;
  }
  return j;
}

Json LoadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::runtime_error("cannot parse '" + path + "': " + e.what());
  }
}

void SaveJsonFile(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace gsval
