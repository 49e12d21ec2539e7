// Copyright 2026 The seatstab Authors
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

// Command-line front end. Every command writes exactly one JSON document to
// `out`; diagnostics go to `err`.
//
// Exit status: 0 success, 1 input error, 2 precondition or limit failure
// (InsufficientLeaves, BudgetExceeded, TooLarge), 3 internal failure.

#ifndef SEATSTAB_CLI_HPP_
#define SEATSTAB_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace seatstab {

inline constexpr const char* kVersion = "0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitInternal = 3;

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace seatstab

#endif  // SEATSTAB_CLI_HPP_
