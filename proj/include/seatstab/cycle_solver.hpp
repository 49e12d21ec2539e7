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

// Neighborhood-stable assignments on cycle seat graphs.
//
// Two regimes, decided by the preference graph alone:
//
//   * Some agent w has two approvers s, t with no arc between them. Seat
//     s, w, t on the first three seats and fill the rest greedily, each seat
//     preferring an agent that approves the previous occupant.
//
//   * Otherwise every two approvers of a common agent are joined by an arc.
//     Start from a minimal path partition laid around the cycle and, while an
//     adjacent blocking pair exists, rebuild the partition so that strictly
//     more seats have an occupant approving its clockwise neighbour. That
//     count is at most n, so at most n rebuilds happen.

#ifndef SEATSTAB_CYCLE_SOLVER_HPP_
#define SEATSTAB_CYCLE_SOLVER_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "seatstab/core.hpp"
#include "seatstab/path_partition.hpp"

namespace seatstab {

// s -> w <- t with neither s -> t nor t -> s.
struct CaseOneTriple {
  Agent s;
  Agent t;
  Agent w;

  friend bool operator==(const CaseOneTriple&, const CaseOneTriple&) = default;
};

// Smallest (w, s, t) with s < t, or nullopt when the instance is in the
// second regime.
std::optional<CaseOneTriple> find_case1_triple(const PreferenceGraph& prefs);

// Throws kNotACycle, kBadParameter for a triple that does not qualify.
Assignment solve_case1(const Instance& inst, const CaseOneTriple& triple);

// How improve_partition rebuilt the partition.
enum class Rebuild {
  // Pair inside one path of length 2: the right member is inserted into the
  // preceding path and the left member is prepended to the following one.
  kShortPath,
  // Pair at the end of a path of length >= 3: both are cut out, the right
  // member is re-inserted, the left member bridges into the following path.
  kLongPath,
  // Pair straddling the two paths of a two-path partition. The left path
  // closes into a cycle, so it is rotated to end just before the pair and the
  // singleton right path is inserted into it.
  kTwoPathRotation,
};

struct ImprovementStep {
  Agent left;   // occupant of seat p
  Agent right;  // occupant of seat p+1
  Rebuild rebuild;
  std::size_t paths_before;
  std::size_t paths_after;
  std::size_t approvals_before;  // right_approval_count
  std::size_t approvals_after;
};

struct Improvement {
  PathPartition partition;
  Rebuild rebuild;
};

// Rebuilds `part` around the blocking pair occupying cycle seats
// (position, position+1) of asg = phi(part). The result is minimal and its
// phi has a strictly larger right_approval_count. Throws kTypeTwoDetected
// when the pair straddles two paths of a partition with three or more paths
// (impossible for a minimal partition in the second regime), and
// kBadParameter if the pair is not blocking.
Improvement improve_partition(const Instance& inst, const PathPartition& part,
                              const Assignment& asg, Seat position);

struct CaseTwoResult {
  Assignment assignment;
  PathPartition initial;
  std::vector<ImprovementStep> steps;
};

// Throws kNotACycle, kBadParameter when a seeding triple exists.
CaseTwoResult solve_case2_traced(const Instance& inst);
Assignment solve_case2(const Instance& inst);

// Dispatches on find_case1_triple. Throws kNotACycle.
Assignment solve_cycle(const Instance& inst);

}  // namespace seatstab

#endif  // SEATSTAB_CYCLE_SOLVER_HPP_
