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

#include "seatstab/cycle_solver.hpp"

#include <string>

#include "seatstab/stability.hpp"

namespace seatstab {

namespace {

void require_cycle(const Instance& inst) {
  if (inst.seats().shape() != SeatShape::kCycle) {
    throw Error(ErrorCode::kNotACycle, "seat graph is not a cycle");
  }
}

std::string describe(Agent x, Agent y) {
  return "(" + std::to_string(x) + ", " + std::to_string(y) + ")";
}

}  // namespace

std::optional<CaseOneTriple> find_case1_triple(const PreferenceGraph& prefs) {
  for (Agent w = 0; w < prefs.size(); ++w) {
    const auto& approvers = prefs.in(w);
    for (std::size_t a = 0; a < approvers.size(); ++a) {
      for (std::size_t b = a + 1; b < approvers.size(); ++b) {
        const Agent s = approvers[a];
        const Agent t = approvers[b];
        if (!prefs.approves(s, t) && !prefs.approves(t, s)) {
          return CaseOneTriple{s, t, w};
        }
      }
    }
  }
  return std::nullopt;
}

Assignment solve_case1(const Instance& inst, const CaseOneTriple& triple) {
  require_cycle(inst);
  const auto& prefs = inst.prefs();
  const auto [s, t, w] = triple;
  if (s == t || s == w || t == w || !prefs.approves(s, w) ||
      !prefs.approves(t, w) || prefs.approves(s, t) || prefs.approves(t, s)) {
    throw Error(ErrorCode::kBadParameter, "not a valid seeding triple");
  }

  const std::size_t n = inst.size();
  std::vector<Seat> seat_of(n, n);
  std::vector<bool> seated(n, false);
  const auto place = [&](Agent a, Seat v) {
    seat_of[a] = v;
    seated[a] = true;
  };
  place(s, 0);
  place(w, 1);
  place(t, 2);

  Agent previous = t;
  Agent next_free = 0;  // smallest unseated agent, advanced lazily
  for (Seat v = 3; v < n; ++v) {
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
    place(chosen, v);
    previous = chosen;
  }
  return Assignment(std::move(seat_of));
}

Improvement improve_partition(const Instance& inst, const PathPartition& part,
                              const Assignment& asg, Seat position) {
  require_cycle(inst);
  const auto& prefs = inst.prefs();
  const std::size_t n = inst.size();
  const std::size_t k = part.size();
  const Agent x = asg.agent_at(position % n);
  const Agent y = asg.agent_at((position + 1) % n);
  if (!is_blocking_pair(inst, asg, x, y)) {
    throw Error(ErrorCode::kBadParameter,
                "agents " + describe(x, y) + " do not form a blocking pair");
  }

  std::vector<std::size_t> path_of(n, k);
  for (std::size_t r = 0; r < k; ++r) {
    for (Agent a : part.paths[r].vertices) path_of[a] = r;
  }
  const std::size_t rx = path_of[x];
  const std::size_t ry = path_of[y];

  std::vector<DirectedPath> rebuilt;
  Rebuild kind;

  if (rx == ry) {
    const DirectedPath& p = part.paths[rx];
    // A blocking right member never approves its clockwise neighbour, so it
    // ends its path, with the left member just before it.
    if (p.size() < 2 || p.tail() != y || p.vertices[p.size() - 2] != x) {
      throw Error(ErrorCode::kInternal,
                  "blocking pair " + describe(x, y) +
                      " is not the last arc of its path");
    }
    const std::size_t next = (rx + 1) % k;
    if (p.size() == 2) {
      kind = Rebuild::kShortPath;
      const std::size_t prev = (rx + k - 1) % k;
      DirectedPath grown = insert_agent(prefs, part.paths[prev], y);
      DirectedPath led;
      led.vertices.push_back(x);
      const DirectedPath& follower = prev == next ? grown : part.paths[next];
      led.vertices.insert(led.vertices.end(), follower.vertices.begin(),
                          follower.vertices.end());
      for (std::size_t r = 0; r < k; ++r) {
        if (r == rx) continue;
        if (r == next) {
          rebuilt.push_back(led);
        } else if (r == prev) {
          rebuilt.push_back(grown);
        } else {
          rebuilt.push_back(part.paths[r]);
        }
      }
    } else {
      kind = Rebuild::kLongPath;
      DirectedPath trimmed;
      trimmed.vertices.assign(p.vertices.begin(), p.vertices.end() - 2);
      DirectedPath merged = insert_agent(prefs, trimmed, y);
      merged.vertices.push_back(x);
      if (k == 1) {
        rebuilt.push_back(std::move(merged));
      } else {
        const auto& follower = part.paths[next].vertices;
        merged.vertices.insert(merged.vertices.end(), follower.begin(),
                               follower.end());
        for (std::size_t r = 0; r < k; ++r) {
          if (r == rx) continue;
          rebuilt.push_back(r == next ? merged : part.paths[r]);
        }
      }
    }
  } else {
    const DirectedPath& left = part.paths[rx];
    const DirectedPath& right = part.paths[ry];
    const bool two_path_rotation = k == 2 && left.tail() == x &&
                                   right.size() == 1 && left.size() >= 2 &&
                                   prefs.approves(x, left.head());
    if (!two_path_rotation) {
      throw Error(ErrorCode::kTypeTwoDetected,
                  "blocking pair " + describe(x, y) +
                      " straddles two paths; the partition is not minimal or "
                      "some agent has two unrelated approvers");
    }
    kind = Rebuild::kTwoPathRotation;
    DirectedPath rotated;
    rotated.vertices.push_back(x);
    rotated.vertices.insert(rotated.vertices.end(), left.vertices.begin(),
                            left.vertices.end() - 1);
    rebuilt.push_back(insert_agent(prefs, rotated, y));
  }

  PathPartition result = minimalize(prefs, PathPartition{std::move(rebuilt)});
  return {std::move(result), kind};
}

CaseTwoResult solve_case2_traced(const Instance& inst) {
  require_cycle(inst);
  const auto& prefs = inst.prefs();
  if (find_case1_triple(prefs)) {
    throw Error(ErrorCode::kBadParameter,
                "instance has two unrelated approvers of a common agent");
  }
  const std::size_t n = inst.size();
  PathPartition part = initial_minimal_partition(prefs);
  CaseTwoResult result{phi(part, n), part, {}};

  while (true) {
    const StabilityReport report =
        check(inst, result.assignment, DistanceBound::at_most(1));
    if (report.stable) break;
    if (result.steps.size() == n) {
      throw Error(ErrorCode::kInternal,
                  "more than n partition rebuilds on a cycle of " +
                      std::to_string(n));
    }
    const Seat si = result.assignment.seat_of(report.witness->i);
    const Seat sj = result.assignment.seat_of(report.witness->j);
    const Seat position = (si + 1) % n == sj ? si : sj;

    Improvement next = improve_partition(inst, part, result.assignment, position);
    Assignment rebuilt = phi(next.partition, n);
    result.steps.push_back(ImprovementStep{
        result.assignment.agent_at(position),
        result.assignment.agent_at((position + 1) % n), next.rebuild,
        part.size(), next.partition.size(),
        right_approval_count(inst, result.assignment),
        right_approval_count(inst, rebuilt)});
    part = std::move(next.partition);
    result.assignment = std::move(rebuilt);
  }
  return result;
}

Assignment solve_case2(const Instance& inst) {
  return solve_case2_traced(inst).assignment;
}

Assignment solve_cycle(const Instance& inst) {
  require_cycle(inst);
  if (auto triple = find_case1_triple(inst.prefs())) {
    return solve_case1(inst, *triple);
  }
  return solve_case2(inst);
}

}  // namespace seatstab
