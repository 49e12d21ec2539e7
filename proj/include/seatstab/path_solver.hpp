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

#ifndef SEATSTAB_PATH_SOLVER_HPP_
#define SEATSTAB_PATH_SOLVER_HPP_

#include <optional>

#include "seatstab/core.hpp"

namespace seatstab {

// Greedy left-to-right fill of a path seat graph: `seed` (agent 0 by default)
// takes seat 0, and every later seat goes to the smallest unseated agent
// approving the previous occupant, or the smallest unseated agent if none
// does. The result has no blocking pair within seat distance 2.
// Throws kNotAPath, kUnknownAgent for an out-of-range seed.
Assignment solve_path(const Instance& inst,
                      std::optional<Agent> seed = std::nullopt);

}  // namespace seatstab

#endif  // SEATSTAB_PATH_SOLVER_HPP_
