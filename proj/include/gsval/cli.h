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

#ifndef GSVAL_CLI_H_
#define GSVAL_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace gsval {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

// Runs the gsval command line. args excludes the program name. Returns 0
// when the command ran (including negative verdicts such as an infeasible
// certificate), 1 when a checked property or reproduction failed and 2 on
// usage errors, unreadable files or invalid input.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace gsval

#endif  // GSVAL_CLI_H_
