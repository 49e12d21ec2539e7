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

// Arbitrary seat graphs with enough leaves.
//
// If X is a directed feedback vertex set of the preferences and the seat
// graph has at least |X| leaves, seat X on leaves and let everyone else pick
// a favourite free seat in sink order (each agent only approves agents
// already seated). The result is neighborhood stable, and fully stable when
// X is empty.

#ifndef SEATSTAB_GENERAL_SOLVER_HPP_
#define SEATSTAB_GENERAL_SOLVER_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "seatstab/core.hpp"

namespace seatstab {

inline constexpr std::size_t kDefaultDfvsBudget = 20;
// Exact search is bitmask based.
inline constexpr std::size_t kMaxDfvsBudget = 63;

struct DfvsResult {
  std::vector<Agent> set;  // ascending
  bool exact;              // minimum size, vs. supplied by the caller
};

// True when the preferences restricted to agents outside `excluded` have no
// directed cycle.
bool is_dfvs(const PreferenceGraph& prefs, const std::vector<Agent>& excluded);

// Minimum DFVS by enumerating subsets in increasing size, lexicographically
// within a size. Throws kBudgetExceeded when n > budget and kBadParameter
// when budget > kMaxDfvsBudget.
DfvsResult compute_dfvs(const PreferenceGraph& prefs,
                        std::size_t budget = kDefaultDfvsBudget);

// Repeatedly removes the smallest agent with no arcs into the remaining
// non-excluded agents. Throws kNotAcyclic if the remainder has a cycle.
std::vector<Agent> sink_order(const PreferenceGraph& prefs,
                              const std::vector<Agent>& excluded);

// Degree-one seats, ascending.
std::vector<Seat> leaves(const SeatGraph& seats);

struct GeneralSolution {
  Assignment assignment;
  DfvsResult dfvs;
};

// X is `supplied_dfvs` if given (validated, kNotAcyclic otherwise), else
// compute_dfvs(budget). Throws kInsufficientLeaves when |X| > #leaves.
GeneralSolution solve_general_detailed(
    const Instance& inst,
    const std::optional<std::vector<Agent>>& supplied_dfvs = std::nullopt,
    std::size_t budget = kDefaultDfvsBudget);

Assignment solve_general(
    const Instance& inst,
    const std::optional<std::vector<Agent>>& supplied_dfvs = std::nullopt,
    std::size_t budget = kDefaultDfvsBudget);

}  // namespace seatstab

#endif  // SEATSTAB_GENERAL_SOLVER_HPP_
