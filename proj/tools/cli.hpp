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

#ifndef EF1_TOOLS_CLI_HPP_
#define EF1_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace ef1::cli {

// Exit statuses shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPredicateFalse = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitBudget = 3;

// Runs one command. `args` excludes the program name. Results go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ef1::cli

#endif  // EF1_TOOLS_CLI_HPP_
