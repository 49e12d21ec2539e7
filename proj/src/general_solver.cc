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

#include "seatstab/general_solver.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace seatstab {

namespace {

std::vector<bool> membership(std::size_t n, const std::vector<Agent>& set) {
  std::vector<bool> in(n, false);
  for (Agent a : set) {
    if (a >= n) {
      throw Error(ErrorCode::kUnknownAgent,
                  "agent " + std::to_string(a) + " does not exist");
    }
    in[a] = true;
  }
  return in;
}

// Sink peeling over the agents in `remaining`, all as bitmasks.
bool acyclic_mask(const std::vector<std::uint64_t>& out,
                  std::uint64_t remaining) {
  bool progress = true;
  while (remaining != 0 && progress) {
    progress = false;
    for (std::uint64_t rest = remaining; rest != 0; rest &= rest - 1) {
      const int v = __builtin_ctzll(rest);
      if ((out[static_cast<std::size_t>(v)] & remaining) == 0) {
        remaining &= ~(std::uint64_t{1} << v);
        progress = true;
      }
    }
  }
  return remaining == 0;
}

}  // namespace

bool is_dfvs(const PreferenceGraph& prefs, const std::vector<Agent>& excluded) {
  const std::size_t n = prefs.size();
  const std::vector<bool> skip = membership(n, excluded);
  // Kahn's algorithm on the induced subgraph, peeling sinks.
  std::vector<std::size_t> live_out(n, 0);
  std::vector<Agent> sinks;
  std::size_t remaining = 0;
  for (Agent v = 0; v < n; ++v) {
    if (skip[v]) continue;
    ++remaining;
    for (Agent u : prefs.out(v)) {
      if (!skip[u]) ++live_out[v];
    }
    if (live_out[v] == 0) sinks.push_back(v);
  }
  while (!sinks.empty()) {
    const Agent v = sinks.back();
    sinks.pop_back();
    --remaining;
    for (Agent u : prefs.in(v)) {
      if (!skip[u] && --live_out[u] == 0) sinks.push_back(u);
    }
  }
  return remaining == 0;
}

DfvsResult compute_dfvs(const PreferenceGraph& prefs, std::size_t budget) {
  if (budget > kMaxDfvsBudget) {
    throw Error(ErrorCode::kBadParameter,
                "DFVS budget is capped at " + std::to_string(kMaxDfvsBudget));
  }
  const std::size_t n = prefs.size();
  if (n > budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                "exact DFVS search is limited to " + std::to_string(budget) +
                    " agents (instance has " + std::to_string(n) +
                    "); supply a feedback vertex set explicitly");
  }
  std::vector<std::uint64_t> out(n, 0);
  for (Agent v = 0; v < n; ++v) {
    for (Agent u : prefs.out(v)) out[v] |= std::uint64_t{1} << u;
  }
  const std::uint64_t everyone =
      n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  for (std::size_t size = 0; size <= n; ++size) {
    // Combinations of `size` agents in lexicographic order.
    std::vector<std::size_t> pick(size);
    for (std::size_t k = 0; k < size; ++k) pick[k] = k;
    while (true) {
      std::uint64_t removed = 0;
      for (std::size_t v : pick) removed |= std::uint64_t{1} << v;
      if (acyclic_mask(out, everyone & ~removed)) {
        return {std::vector<Agent>(pick.begin(), pick.end()), true};
      }
      std::size_t k = size;
      while (k > 0 && pick[k - 1] == n - size + k - 1) --k;
      if (k == 0) break;
      ++pick[k - 1];
      for (std::size_t m = k; m < size; ++m) pick[m] = pick[m - 1] + 1;
    }
  }
  // Removing every agent always leaves an acyclic graph.
  throw Error(ErrorCode::kInternal, "DFVS enumeration fell through");
}

std::vector<Agent> sink_order(const PreferenceGraph& prefs,
                              const std::vector<Agent>& excluded) {
  const std::size_t n = prefs.size();
  const std::vector<bool> skip = membership(n, excluded);
  std::vector<std::size_t> live_out(n, 0);
  std::vector<bool> done = skip;
  std::size_t remaining = 0;
  for (Agent v = 0; v < n; ++v) {
    if (skip[v]) continue;
    ++remaining;
    for (Agent u : prefs.out(v)) {
      if (!skip[u]) ++live_out[v];
    }
  }
  std::vector<Agent> order;
  order.reserve(remaining);
  while (order.size() < remaining) {
    Agent sink = n;
    for (Agent v = 0; v < n; ++v) {
      if (!done[v] && live_out[v] == 0) {
        sink = v;
        break;
      }
    }
    if (sink == n) {
      throw Error(ErrorCode::kNotAcyclic,
                  "preferences outside the excluded set contain a cycle");
    }
    done[sink] = true;
    order.push_back(sink);
    for (Agent u : prefs.in(sink)) {
      if (!skip[u]) --live_out[u];
    }
  }
  return order;
}

std::vector<Seat> leaves(const SeatGraph& seats) {
  std::vector<Seat> result;
  for (Seat v = 0; v < seats.size(); ++v) {
    if (seats.degree(v) == 1) result.push_back(v);
  }
  return result;
}

GeneralSolution solve_general_detailed(
    const Instance& inst, const std::optional<std::vector<Agent>>& supplied_dfvs,
    std::size_t budget) {
  const auto& prefs = inst.prefs();
  const auto& seats = inst.seats();
  const std::size_t n = inst.size();

  DfvsResult dfvs;
  if (supplied_dfvs) {
    dfvs.set = *supplied_dfvs;
    std::sort(dfvs.set.begin(), dfvs.set.end());
    dfvs.set.erase(std::unique(dfvs.set.begin(), dfvs.set.end()),
                   dfvs.set.end());
    dfvs.exact = false;
    if (!is_dfvs(prefs, dfvs.set)) {
      throw Error(ErrorCode::kNotAcyclic,
                  "supplied set is not a directed feedback vertex set");
    }
  } else {
    dfvs = compute_dfvs(prefs, budget);
  }

  const std::vector<Seat> leaf_seats = leaves(seats);
  if (dfvs.set.size() > leaf_seats.size()) {
    throw Error(ErrorCode::kInsufficientLeaves,
                "feedback vertex set has " + std::to_string(dfvs.set.size()) +
                    " agents but the seat graph has only " +
                    std::to_string(leaf_seats.size()) + " leaves");
  }

  std::vector<Seat> seat_of(n, n);
  std::vector<Agent> occupant(n, n);
  for (std::size_t k = 0; k < dfvs.set.size(); ++k) {
    seat_of[dfvs.set[k]] = leaf_seats[k];
    occupant[leaf_seats[k]] = dfvs.set[k];
  }

  // Each agent in sink order approves only agents already seated, so its
  // favourite seat is the free seat with the most approved neighbours.
  for (Agent a : sink_order(prefs, dfvs.set)) {
    Seat best = n;
    std::size_t best_score = 0;
    for (Seat v = 0; v < n; ++v) {
      if (occupant[v] != n) continue;
      std::size_t score = 0;
      for (Seat u : seats.neighbors(v)) {
        if (occupant[u] != n && prefs.approves(a, occupant[u])) ++score;
      }
      if (best == n || score > best_score) {
        best = v;
        best_score = score;
      }
    }
    seat_of[a] = best;
    occupant[best] = a;
  }
  return {Assignment(std::move(seat_of)), std::move(dfvs)};
}

Assignment solve_general(const Instance& inst,
                         const std::optional<std::vector<Agent>>& supplied_dfvs,
                         std::size_t budget) {
  return solve_general_detailed(inst, supplied_dfvs, budget).assignment;
}

}  // namespace seatstab
