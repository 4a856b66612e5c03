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

// Named reproductions with their expected values.

#ifndef GSVAL_REPRODUCE_H_
#define GSVAL_REPRODUCE_H_

#include <cstdint>
#include <string>
#include <vector>

namespace gsval {

struct ClaimCheck {
  std::string description;
  bool pass = false;
  // Observed value(s).
  std::string detail;
};

struct ClaimReport {
  std::string id;
  bool pass = false;
  std::vector<ClaimCheck> checks;
};

struct ReproduceOptions {
  // Parameter of approx2 and ba-gap.
  int k = 2;
  uint64_t seed = 7;
  int jobs = 1;
};

struct ClaimInfo {
  std::string id;
  std::string summary;
};

std::vector<ClaimInfo> Claims();

// Throws std::invalid_argument for an unknown id or an out-of-range k.
ClaimReport Reproduce(const std::string& id, const ReproduceOptions& options);

}  // namespace gsval

#endif  // GSVAL_REPRODUCE_H_
