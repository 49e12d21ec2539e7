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

#include "seatstab/path_partition.hpp"

#include <algorithm>
#include <string>

namespace seatstab {

std::vector<Agent> PathPartition::flatten() const {
  std::vector<Agent> order;
  for (const auto& p : paths) {
    order.insert(order.end(), p.vertices.begin(), p.vertices.end());
  }
  return order;
}

bool is_valid_path(const PreferenceGraph& prefs, const DirectedPath& path) {
  if (path.vertices.empty()) return false;
  std::vector<bool> seen(prefs.size(), false);
  for (std::size_t k = 0; k < path.size(); ++k) {
    const Agent v = path.vertices[k];
    if (v >= prefs.size() || seen[v]) return false;
    seen[v] = true;
    if (k > 0 && !prefs.approves(path.vertices[k - 1], v)) return false;
  }
  return true;
}

bool is_valid_partition(const PreferenceGraph& prefs,
                        const PathPartition& part) {
  std::vector<int> hits(prefs.size(), 0);
  for (const auto& p : part.paths) {
    if (!is_valid_path(prefs, p)) return false;
    for (Agent v : p.vertices) ++hits[v];
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

bool is_minimal(const PreferenceGraph& prefs, const PathPartition& part) {
  for (std::size_t i = 0; i < part.size(); ++i) {
    for (std::size_t j = 0; j < part.size(); ++j) {
      if (i != j &&
          prefs.approves(part.paths[i].tail(), part.paths[j].head())) {
        return false;
      }
    }
  }
  return true;
}

DirectedPath maximal_path_from(const PreferenceGraph& prefs,
                               const std::vector<bool>& alive, Agent seed) {
  std::vector<bool> free = alive;
  free[seed] = false;

  const auto first_free = [&](const std::vector<Agent>& candidates) {
    auto it = std::find_if(candidates.begin(), candidates.end(),
                           [&](Agent a) { return free[a]; });
    return it == candidates.end() ? prefs.size() : *it;
  };

  std::vector<Agent> forward{seed};
  for (Agent next = first_free(prefs.out(seed)); next != prefs.size();
       next = first_free(prefs.out(forward.back()))) {
    free[next] = false;
    forward.push_back(next);
  }
  std::vector<Agent> backward;  // reversed prefix
  for (Agent prev = first_free(prefs.in(seed)); prev != prefs.size();
       prev = first_free(prefs.in(backward.back()))) {
    free[prev] = false;
    backward.push_back(prev);
  }

  DirectedPath path;
  path.vertices.assign(backward.rbegin(), backward.rend());
  path.vertices.insert(path.vertices.end(), forward.begin(), forward.end());
  return path;
}

PathPartition initial_minimal_partition(const PreferenceGraph& prefs) {
  const std::size_t n = prefs.size();
  std::vector<bool> alive(n, true);
  PathPartition part;
  for (Agent seed = 0; seed < n; ++seed) {
    if (!alive[seed]) continue;
    DirectedPath p = maximal_path_from(prefs, alive, seed);
    for (Agent v : p.vertices) alive[v] = false;
    part.paths.push_back(std::move(p));
  }
  return part;
}

PathPartition minimalize(const PreferenceGraph& prefs, PathPartition part) {
  auto& paths = part.paths;
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t i = 0; i < paths.size() && !merged; ++i) {
      for (std::size_t j = 0; j < paths.size(); ++j) {
        if (i == j || !prefs.approves(paths[i].tail(), paths[j].head())) {
          continue;
        }
        auto& target = paths[i].vertices;
        target.insert(target.end(), paths[j].vertices.begin(),
                      paths[j].vertices.end());
        paths.erase(paths.begin() + static_cast<std::ptrdiff_t>(j));
        merged = true;
        break;
      }
    }
  }
  return part;
}

DirectedPath insert_agent(const PreferenceGraph& prefs, const DirectedPath& path,
                          Agent s) {
  const auto& vs = path.vertices;
  if (std::find(vs.begin(), vs.end(), s) != vs.end()) {
    throw Error(ErrorCode::kBadParameter,
                "agent " + std::to_string(s) + " is already on the path");
  }
  DirectedPath result = path;
  if (vs.empty() || prefs.approves(s, vs.front())) {
    result.vertices.insert(result.vertices.begin(), s);
    return result;
  }
  for (std::size_t j = 0; j + 1 < vs.size(); ++j) {
    if (prefs.approves(vs[j], s) && prefs.approves(s, vs[j + 1])) {
      result.vertices.insert(
          result.vertices.begin() + static_cast<std::ptrdiff_t>(j + 1), s);
      return result;
    }
  }
  throw Error(ErrorCode::kNoInsertionPoint,
              "no insertion point for agent " + std::to_string(s) +
                  "; some agent has two unrelated approvers");
}

Assignment phi(const PathPartition& part, std::size_t seat_count) {
  const std::vector<Agent> order = part.flatten();
  if (order.size() != seat_count) {
    throw Error(ErrorCode::kSizeMismatch,
                "partition covers " + std::to_string(order.size()) +
                    " agents but the cycle has " + std::to_string(seat_count) +
                    " seats");
  }
  std::vector<Seat> seat_of(seat_count, seat_count);
  for (Seat v = 0; v < seat_count; ++v) {
    const Agent a = order[v];
    if (a >= seat_count || seat_of[a] != seat_count) {
      throw Error(ErrorCode::kSizeMismatch,
                  "partition does not cover agents 0.." +
                      std::to_string(seat_count - 1) + " exactly once");
    }
    seat_of[a] = v;
  }
  return Assignment(std::move(seat_of));
}

std::size_t right_approval_count(const Instance& inst, const Assignment& asg) {
  if (inst.seats().shape() != SeatShape::kCycle) {
    throw Error(ErrorCode::kNotACycle, "seat graph is not a cycle");
  }
  const std::size_t n = inst.size();
  std::size_t count = 0;
  for (Seat v = 0; v < n; ++v) {
    if (inst.prefs().approves(asg.agent_at(v), asg.agent_at((v + 1) % n))) {
      ++count;
    }
  }
  return count;
}

}  // namespace seatstab
