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

// Utilities, envy and blocking pairs.
//
// An agent's utility is the number of approved agents on adjacent seats. Agent
// i envies j when taking j's seat strictly raises i's utility; a blocking pair
// is two agents that envy each other. Stability is parameterised by the seat
// distance between the two members: bound 1 is neighborhood stability,
// unbounded is ordinary exchange stability.

#ifndef SEATSTAB_STABILITY_HPP_
#define SEATSTAB_STABILITY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "seatstab/core.hpp"

namespace seatstab {

class DistanceBound {
 public:
  static DistanceBound unbounded() { return DistanceBound(); }
  // Throws kBadParameter for 0.
  static DistanceBound at_most(std::uint32_t d);

  bool is_unbounded() const { return !limit_.has_value(); }
  // Precondition: !is_unbounded().
  std::uint32_t limit() const { return *limit_; }
  // Pairs in different components (kUnreachable) are admitted only when
  // unbounded.
  bool admits(std::uint32_t distance) const {
    return !limit_ || distance <= *limit_;
  }

  friend bool operator==(const DistanceBound&, const DistanceBound&) = default;

 private:
  DistanceBound() = default;
  explicit DistanceBound(std::uint32_t d) : limit_(d) {}

  std::optional<std::uint32_t> limit_;
};

struct Witness {
  Agent i;  // i < j
  Agent j;
  std::uint32_t distance;  // SeatGraph::kUnreachable across components

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct StabilityReport {
  DistanceBound bound;
  bool stable;
  std::optional<Witness> witness;
};

std::size_t utility(const Instance& inst, const Assignment& asg, Agent i);

// Utility of i in asg with the seats of i and j exchanged, computed without
// materialising the swap.
std::size_t utility_after_swap(const Instance& inst, const Assignment& asg,
                               Agent i, Agent j);

// Throws kSameAgent.
bool envies(const Instance& inst, const Assignment& asg, Agent i, Agent j);

bool is_blocking_pair(const Instance& inst, const Assignment& asg, Agent i,
                      Agent j);

// Scans pairs (i, j), i < j, lexicographically and reports the first
// blocking pair whose seats are within `bound`.
StabilityReport check(const Instance& inst, const Assignment& asg,
                      DistanceBound bound);

// Cycle-only certificates. Positions are cycle seats, taken mod n.

// True when the occupants of seats p and p+1 provably cannot block: either
// occupant(p+1) does not approve occupant(p-1), or occupant(p) does not
// approve occupant(p+2). Throws kNotACycle.
bool obs1_holds(const Instance& inst, const Assignment& asg, Seat position);

enum class Side { kLeft, kRight };

// True when occupant(p) approves its neighbour on `side`; that certifies it
// does not envy the neighbour on the opposite side. False means "no
// certificate", not "envies". Throws kNotACycle.
bool obs2_nonenvy(const Instance& inst, const Assignment& asg, Seat position,
                  Side side);

}  // namespace seatstab

#endif  // SEATSTAB_STABILITY_HPP_
