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

#ifndef SEATSTAB_DYNAMICS_HPP_
#define SEATSTAB_DYNAMICS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "seatstab/core.hpp"

namespace seatstab {

// All blocking pairs (i, j), i < j, on adjacent seats, sorted.
std::vector<std::pair<Agent, Agent>> blocking_pairs_adjacent(
    const Instance& inst, const Assignment& asg);

struct SwapPolicy {
  enum class Kind { kFirst, kRandom };

  static SwapPolicy first() { return {Kind::kFirst, 0}; }
  static SwapPolicy random(std::uint64_t seed) { return {Kind::kRandom, seed}; }

  Kind kind;
  std::uint64_t seed;  // only meaningful for kRandom
};

enum class Outcome { kConverged, kCycled, kCapped };

struct DynamicsTrace {
  SwapPolicy policy;
  std::size_t max_steps;
  // states.front() is the start; states[k+1] = states[k] with swaps[k] applied.
  std::vector<Assignment> states;
  std::vector<std::pair<Agent, Agent>> swaps;
  Outcome outcome;
  // For kCycled: states.back() == states[*first_repeat_index].
  std::optional<std::size_t> first_repeat_index;
};

inline std::size_t default_max_steps(std::size_t n) { return n * n * 64; }

// Swap dynamics: while some adjacent blocking pair exists, swap one (the
// smallest under kFirst, uniformly drawn under kRandom). Stops when no pair
// is left, when a state repeats, or after max_steps swaps.
DynamicsTrace run_dynamics(const Instance& inst, const Assignment& start,
                           SwapPolicy policy,
                           std::optional<std::size_t> max_steps = std::nullopt);

}  // namespace seatstab

#endif  // SEATSTAB_DYNAMICS_HPP_
