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

#include "seatstab/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace seatstab {

namespace {

bool extend_automorphism(const SeatGraph& g, std::vector<Seat>& image,
                         std::vector<bool>& used, Seat next) {
  const std::size_t n = g.size();
  if (next == n) return true;
  if (image[next] != n) return extend_automorphism(g, image, used, next + 1);
  for (Seat cand = 0; cand < n; ++cand) {
    if (used[cand] || g.degree(cand) != g.degree(next)) continue;
    bool consistent = true;
    for (Seat u = 0; u < n && consistent; ++u) {
      if (image[u] != n && g.adjacent(next, u) != g.adjacent(cand, image[u])) {
        consistent = false;
      }
    }
    if (!consistent) continue;
    image[next] = cand;
    used[cand] = true;
    if (extend_automorphism(g, image, used, next + 1)) return true;
    image[next] = n;
    used[cand] = false;
  }
  return false;
}

}  // namespace

bool is_vertex_transitive(const SeatGraph& seats) {
  const std::size_t n = seats.size();
  if (seats.shape() == SeatShape::kCycle) return true;
  for (Seat target = 1; target < n; ++target) {
    if (seats.degree(target) != seats.degree(0)) return false;
    std::vector<Seat> image(n, n);
    std::vector<bool> used(n, false);
    image[0] = target;
    used[target] = true;
    if (!extend_automorphism(seats, image, used, 1)) return false;
  }
  return true;
}

OracleResult oracle_search(const Instance& inst, DistanceBound bound,
                           OracleMode mode, OracleOptions options) {
  const std::size_t n = inst.size();
  if (n > options.limit) {
    throw Error(ErrorCode::kTooLarge,
                "exhaustive search is limited to " +
                    std::to_string(options.limit) + " agents (instance has " +
                    std::to_string(n) + ")");
  }
  OracleResult result;
  result.mode = mode;
  result.pruned = mode != OracleMode::kEnumerate &&
                  options.symmetry == Symmetry::kAuto && n > 1 &&
                  is_vertex_transitive(inst.seats());

  std::vector<Seat> seat_of(n);
  std::iota(seat_of.begin(), seat_of.end(), Seat{0});
  // With pruning agent 0 stays on seat 0 and only the tail is permuted.
  const auto first = seat_of.begin() + (result.pruned ? 1 : 0);
  do {
    ++result.examined;
    Assignment asg(seat_of);
    if (!check(inst, asg, bound).stable) continue;
    result.exists = true;
    ++result.count;
    if (mode == OracleMode::kExists) break;
    if (mode == OracleMode::kEnumerate) result.stable.push_back(std::move(asg));
  } while (std::next_permutation(first, seat_of.end()));

  if (result.pruned && mode == OracleMode::kCount) {
    // Automorphisms moving seat 0 to seat v biject the stable assignments
    // with agent 0 on seat 0 onto those with agent 0 on seat v.
    result.count *= n;
  }
  return result;
}

}  // namespace seatstab
