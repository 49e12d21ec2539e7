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

// Directed paths in the preference graph and partitions of the agents into
// such paths. A partition is minimal when no path's tail approves another
// path's head. Laying the paths end to end around a cycle (phi) gives the
// starting point of the cycle solver's improvement loop.
//
// Every tie is broken towards the smallest agent index.

#ifndef SEATSTAB_PATH_PARTITION_HPP_
#define SEATSTAB_PATH_PARTITION_HPP_

#include <cstddef>
#include <vector>

#include "seatstab/core.hpp"

namespace seatstab {

struct DirectedPath {
  std::vector<Agent> vertices;

  std::size_t size() const { return vertices.size(); }
  Agent head() const { return vertices.front(); }
  Agent tail() const { return vertices.back(); }

  friend bool operator==(const DirectedPath&, const DirectedPath&) = default;
};

struct PathPartition {
  std::vector<DirectedPath> paths;

  std::size_t size() const { return paths.size(); }
  // Concatenation of all paths in order.
  std::vector<Agent> flatten() const;

  friend bool operator==(const PathPartition&, const PathPartition&) = default;
};

// Non-empty, no repeats, consecutive vertices joined by arcs.
bool is_valid_path(const PreferenceGraph& prefs, const DirectedPath& path);
// Every path valid and every agent covered exactly once.
bool is_valid_partition(const PreferenceGraph& prefs, const PathPartition& part);
bool is_minimal(const PreferenceGraph& prefs, const PathPartition& part);

// Grows a path through `seed` inside `alive`: first forward from the tail
// until stuck, then backward from the head until stuck.
DirectedPath maximal_path_from(const PreferenceGraph& prefs,
                               const std::vector<bool>& alive, Agent seed);

// Repeatedly extracts a maximal path seeded at the smallest remaining agent.
// The result is minimal.
PathPartition initial_minimal_partition(const PreferenceGraph& prefs);

// Concatenates P_i + P_j whenever tail(P_i) -> head(P_j), rescanning from the
// start after each merge, until the partition is minimal. The merged path
// takes the slot of P_i.
PathPartition minimalize(const PreferenceGraph& prefs, PathPartition part);

// Inserts s into `path`, given s -> tail(path): prepend when s -> head,
// otherwise between the first s_j, s_{j+1} with s_j -> s -> s_{j+1}. Such a
// slot always exists when every two approvers of a common agent are joined
// by an arc; kNoInsertionPoint otherwise.
DirectedPath insert_agent(const PreferenceGraph& prefs, const DirectedPath& path,
                          Agent s);

// Seats the concatenated paths on cycle seats 0, 1, 2, ... in order.
// Throws kSizeMismatch unless the partition covers exactly `seat_count`
// distinct agents.
Assignment phi(const PathPartition& part, std::size_t seat_count);

// Number of cycle seats v whose occupant approves the occupant of v+1.
// Throws kNotACycle.
std::size_t right_approval_count(const Instance& inst, const Assignment& asg);

}  // namespace seatstab

#endif  // SEATSTAB_PATH_PARTITION_HPP_
