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

#include "seatstab/path_solver.hpp"

#include <string>
#include <vector>

namespace seatstab {

Assignment solve_path(const Instance& inst, std::optional<Agent> seed) {
  if (inst.seats().shape() != SeatShape::kPath) {
    throw Error(ErrorCode::kNotAPath, "seat graph is not a path");
  }
  const std::size_t n = inst.size();
  const Agent first = seed.value_or(0);
  if (first >= n) {
    throw Error(ErrorCode::kUnknownAgent,
                "seed agent " + std::to_string(first) + " does not exist");
  }

  const auto& prefs = inst.prefs();
  std::vector<Seat> seat_of(n, n);
  std::vector<bool> seated(n, false);
  seat_of[first] = 0;
  seated[first] = true;

  Agent previous = first;
  Agent next_free = 0;
  for (Seat v = 1; v < n; ++v) {
    Agent chosen = n;
    for (Agent q : prefs.in(previous)) {
      if (!seated[q]) {
        chosen = q;
        break;
      }
    }
    if (chosen == n) {
      while (seated[next_free]) ++next_free;
      chosen = next_free;
    }
    seat_of[chosen] = v;
    seated[chosen] = true;
    previous = chosen;
  }
  return Assignment(std::move(seat_of));
}

}  // namespace seatstab
