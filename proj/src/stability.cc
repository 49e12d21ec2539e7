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

#include "seatstab/stability.hpp"

#include <algorithm>
#include <string>

namespace seatstab {

DistanceBound DistanceBound::at_most(std::uint32_t d) {
  if (d == 0) {
    throw Error(ErrorCode::kBadParameter, "distance bound must be positive");
  }
  return DistanceBound(d);
}

std::size_t utility(const Instance& inst, const Assignment& asg, Agent i) {
  const auto& prefs = inst.prefs();
  std::size_t u = 0;
  for (Seat v : inst.seats().neighbors(asg.seat_of(i))) {
    if (prefs.approves(i, asg.agent_at(v))) ++u;
  }
  return u;
}

std::size_t utility_after_swap(const Instance& inst, const Assignment& asg,
                               Agent i, Agent j) {
  const auto& prefs = inst.prefs();
  const Seat home = asg.seat_of(i);
  std::size_t u = 0;
  for (Seat v : inst.seats().neighbors(asg.seat_of(j))) {
    // j moves into i's old seat.
    const Agent occupant = v == home ? j : asg.agent_at(v);
    if (prefs.approves(i, occupant)) ++u;
  }
  return u;
}

bool envies(const Instance& inst, const Assignment& asg, Agent i, Agent j) {
  if (i == j) {
    throw Error(ErrorCode::kSameAgent,
                "envy is undefined for agent " + std::to_string(i) +
                    " and itself");
  }
  return utility_after_swap(inst, asg, i, j) > utility(inst, asg, i);
}

bool is_blocking_pair(const Instance& inst, const Assignment& asg, Agent i,
                      Agent j) {
  return envies(inst, asg, i, j) && envies(inst, asg, j, i);
}

StabilityReport check(const Instance& inst, const Assignment& asg,
                      DistanceBound bound) {
  const std::size_t n = inst.size();
  const auto& seats = inst.seats();
  std::vector<std::size_t> util(n);
  for (Agent i = 0; i < n; ++i) util[i] = utility(inst, asg, i);

  const auto blocks = [&](Agent i, Agent j) {
    return utility_after_swap(inst, asg, i, j) > util[i] &&
           utility_after_swap(inst, asg, j, i) > util[j];
  };

  if (!bound.is_unbounded() && bound.limit() == 1) {
    // Adjacent pairs only: walk the seat adjacency instead of all pairs.
    std::vector<Agent> later;
    for (Agent i = 0; i < n; ++i) {
      later.clear();
      for (Seat v : seats.neighbors(asg.seat_of(i))) {
        if (asg.agent_at(v) > i) later.push_back(asg.agent_at(v));
      }
      std::sort(later.begin(), later.end());
      for (Agent j : later) {
        if (blocks(i, j)) return {bound, false, Witness{i, j, 1}};
      }
    }
    return {bound, true, std::nullopt};
  }

  for (Agent i = 0; i < n; ++i) {
    const auto dist = seats.distances_from(asg.seat_of(i));
    for (Agent j = i + 1; j < n; ++j) {
      const std::uint32_t d = dist[asg.seat_of(j)];
      if (!bound.admits(d)) continue;
      if (blocks(i, j)) return {bound, false, Witness{i, j, d}};
    }
  }
  return {bound, true, std::nullopt};
}

namespace {

void require_cycle(const Instance& inst) {
  if (inst.seats().shape() != SeatShape::kCycle) {
    throw Error(ErrorCode::kNotACycle, "seat graph is not a cycle");
  }
}

}  // namespace

bool obs1_holds(const Instance& inst, const Assignment& asg, Seat position) {
  require_cycle(inst);
  const std::size_t n = inst.size();
  const auto at = [&](std::size_t offset) {
    return asg.agent_at((position + offset) % n);
  };
  const auto& prefs = inst.prefs();
  // at(n - 1) is position - 1 mod n.
  const bool p1 = !prefs.approves(at(1), at(n - 1));
  const bool p2 = !prefs.approves(at(0), at(2));
  return p1 || p2;
}

bool obs2_nonenvy(const Instance& inst, const Assignment& asg, Seat position,
                  Side side) {
  require_cycle(inst);
  const std::size_t n = inst.size();
  const Agent self = asg.agent_at(position % n);
  const Seat toward =
      side == Side::kLeft ? (position + n - 1) % n : (position + 1) % n;
  return inst.prefs().approves(self, asg.agent_at(toward));
}

}  // namespace seatstab
