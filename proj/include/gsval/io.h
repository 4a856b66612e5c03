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

// JSON formats.
//
//   valuation: {"m": 3, "names": ["a", "b", "c"], "values": ["0", "1", ...]}
//     values[mask] is a canonical rational string; names is optional.
//   matroid:   {"n": 3, "independent": [0, 1, 2, ...]}
//   network:   {"u": 2, "v": 3, "edges": [[0, 1, "1/2"], ...],
//               "inner": <valuation>}
//
// Readers throw std::invalid_argument naming the offending field.

#ifndef GSVAL_IO_H_
#define GSVAL_IO_H_

#include <string>

#include "json.hpp"

#include "gsval/analysis.h"
#include "gsval/certify.h"
#include "gsval/classes.h"
#include "gsval/constructions.h"
#include "gsval/lp.h"
#include "gsval/set_function.h"
#include "gsval/transforms.h"

namespace gsval {

using Json = nlohmann::ordered_json;

Json ToJson(const SetFunction& f);
SetFunction ValuationFromJson(const Json& j);

Json ToJson(const Matroid& matroid);
Matroid MatroidFromJson(const Json& j);

Json ToJson(const InductionNetwork& net);
InductionNetwork NetworkFromJson(const Json& j);

// Items of a subset, increasing.
Json SubsetToJson(Subset s);

Json ToJson(const CheckResult& result);
Json ToJson(const ClassReport& report);
Json ToJson(const GapReport& report);
Json ToJson(const LinExpr& expr);
Json ToJson(const LPProblem& problem);
Json ToJson(const LPOutcome& outcome);
// The combination order, the pruned-node log and, when feasible, the
// witness valuation and its branch path.
Json ToJson(const SearchProblem& problem, const Certificate& certificate);

// Throws std::runtime_error when the file cannot be read or parsed.
Json LoadJsonFile(const std::string& path);
void SaveJsonFile(const std::string& path, const Json& j);

}  // namespace gsval

#endif  // GSVAL_IO_H_
