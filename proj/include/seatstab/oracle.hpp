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

// Exhaustive search over all n! assignments of small instances.

#ifndef SEATSTAB_ORACLE_HPP_
#define SEATSTAB_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "seatstab/core.hpp"
#include "seatstab/stability.hpp"

namespace seatstab {

inline constexpr std::size_t kDefaultOracleLimit = 9;

enum class OracleMode { kExists, kCount, kEnumerate };

enum class Symmetry {
  kOff,
  // Fix agent 0 on seat 0 when the seat graph is vertex-transitive. Applies
  // to exists/count only; enumerate always walks every permutation.
  kAuto,
};

struct OracleOptions {
  std::size_t limit = kDefaultOracleLimit;
  Symmetry symmetry = Symmetry::kAuto;
};

struct OracleResult {
  OracleMode mode;
  bool exists = false;
  std::uint64_t count = 0;            // kCount and kEnumerate
  std::vector<Assignment> stable;     // kEnumerate, lexicographic seat order
  std::uint64_t examined = 0;         // permutations checked
  bool pruned = false;                // symmetry reduction was used
};

// True when some automorphism maps seat 0 to every other seat.
bool is_vertex_transitive(const SeatGraph& seats);

// Throws kTooLarge when n > options.limit.
OracleResult oracle_search(const Instance& inst, DistanceBound bound,
                           OracleMode mode, OracleOptions options = {});

}  // namespace seatstab

#endif  // SEATSTAB_ORACLE_HPP_
