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


// Shared fixtures and slow reference implementations for the test suites.
// The reference checker recomputes everything from the raw edge and arc
// lists, independently of the library's cached adjacency and distances.

#ifndef SEATSTAB_TESTS_TEST_SUPPORT_HPP_
#define SEATSTAB_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seatstab/core.hpp"
#include "seatstab/stability.hpp"

namespace seatstab::testing {

using LabelArcs = std::vector<std::pair<std::string, std::string>>;

inline Instance build(std::vector<std::string> labels, const LabelArcs& arcs,
                      SeatGraph seats) {
  return make_instance(std::move(labels), arcs, std::move(seats));
}

// Seat graph distances by Floyd-Warshall over the edge list.
inline std::vector<std::vector<std::uint64_t>> reference_distances(
    const SeatGraph& g) {
  const std::size_t n = g.size();
  const std::uint64_t inf = std::numeric_limits<std::uint64_t>::max() / 4;
  std::vector<std::vector<std::uint64_t>> d(n, std::vector<std::uint64_t>(n, inf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  return d;
}

// Utility of agent i when agents sit on seats `seat_of`, by scanning every
// other agent.
inline std::size_t reference_utility(const Instance& inst,
                                     const std::vector<Seat>& seat_of, Agent i) {
  const auto edges = inst.seats().edges();
  std::size_t u = 0;
  for (Agent j = 0; j < inst.size(); ++j) {
    if (j == i || !inst.prefs().approves(i, j)) continue;
    const Seat a = std::min(seat_of[i], seat_of[j]);
    const Seat b = std::max(seat_of[i], seat_of[j]);
    for (const auto& e : edges) {
      if (e.first == a && e.second == b) {
        ++u;
        break;
      }
    }
  }
  return u;
}

inline bool reference_envies(const Instance& inst,
                             const std::vector<Seat>& seat_of, Agent i,
                             Agent j) {
  std::vector<Seat> swapped = seat_of;
  std::swap(swapped[i], swapped[j]);
  return reference_utility(inst, swapped, i) > reference_utility(inst, seat_of, i);
}

// Lexicographically first blocking pair within `limit` (nullopt: unbounded).
inline std::optional<std::pair<Agent, Agent>> reference_blocking_pair(
    const Instance& inst, const Assignment& asg,
    std::optional<std::uint64_t> limit) {
  const auto dist = reference_distances(inst.seats());
  const auto& seat_of = asg.seats();
  for (Agent i = 0; i < inst.size(); ++i) {
    for (Agent j = i + 1; j < inst.size(); ++j) {
      if (limit && dist[seat_of[i]][seat_of[j]] > *limit) continue;
      if (reference_envies(inst, seat_of, i, j) &&
          reference_envies(inst, seat_of, j, i)) {
        return std::make_pair(i, j);
      }
    }
  }
  return std::nullopt;
}

inline bool reference_stable(const Instance& inst, const Assignment& asg,
                             std::optional<std::uint64_t> limit) {
  return !reference_blocking_pair(inst, asg, limit).has_value();
}

// Every assignment of n agents, lexicographic in seat_of.
template <typename F>
void for_each_assignment(std::size_t n, F&& f) {
  std::vector<Seat> seat_of(n);
  for (Seat v = 0; v < n; ++v) seat_of[v] = v;
  do {
    f(Assignment(seat_of));
  } while (std::next_permutation(seat_of.begin(), seat_of.end()));
}

}  // namespace seatstab::testing

#endif  // SEATSTAB_TESTS_TEST_SUPPORT_HPP_
