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

#include "seatstab/dynamics.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "seatstab/stability.hpp"

namespace seatstab {

std::vector<std::pair<Agent, Agent>> blocking_pairs_adjacent(
    const Instance& inst, const Assignment& asg) {
  std::vector<std::pair<Agent, Agent>> pairs;
  for (const auto& [u, v] : inst.seats().edges()) {
    Agent i = asg.agent_at(u);
    Agent j = asg.agent_at(v);
    if (i > j) std::swap(i, j);
    if (is_blocking_pair(inst, asg, i, j)) pairs.emplace_back(i, j);
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

DynamicsTrace run_dynamics(const Instance& inst, const Assignment& start,
                           SwapPolicy policy,
                           std::optional<std::size_t> max_steps) {
  if (start.size() != inst.size()) {
    throw Error(ErrorCode::kSizeMismatch,
                "assignment size does not match the instance");
  }
  DynamicsTrace trace{policy, max_steps.value_or(default_max_steps(inst.size())),
                      {start}, {}, Outcome::kCapped, std::nullopt};
  std::mt19937_64 rng(policy.seed);
  std::map<std::vector<Seat>, std::size_t> seen{{start.seats(), 0}};

  while (true) {
    const Assignment& current = trace.states.back();
    const auto pairs = blocking_pairs_adjacent(inst, current);
    if (pairs.empty()) {
      trace.outcome = Outcome::kConverged;
      break;
    }
    if (trace.swaps.size() >= trace.max_steps) {
      trace.outcome = Outcome::kCapped;
      break;
    }
    std::size_t pick = 0;
    if (policy.kind == SwapPolicy::Kind::kRandom && pairs.size() > 1) {
      pick = static_cast<std::size_t>(rng() % pairs.size());
    }
    const auto [i, j] = pairs[pick];
    Assignment next = current.swapped(i, j);
    trace.swaps.emplace_back(i, j);
    auto [it, fresh] = seen.emplace(next.seats(), trace.states.size());
    trace.states.push_back(std::move(next));
    if (!fresh) {
      trace.outcome = Outcome::kCycled;
      trace.first_repeat_index = it->second;
      break;
    }
  }
  return trace;
}

}  // namespace seatstab
