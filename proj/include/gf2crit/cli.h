// Copyright 2026 The gf2crit Authors.
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

#ifndef GF2CRIT_CLI_H_
#define GF2CRIT_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace gf2crit {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kParse = 2;
inline constexpr int kCostCeiling = 3;
inline constexpr int kBudget = 4;
inline constexpr int kHypothesisNotMet = 5;
inline constexpr int kUsage = 64;
}  // namespace exit_code

// Entry point of the gf2crit binary. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

// Same, with the arguments after the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace gf2crit

#endif  // GF2CRIT_CLI_H_
