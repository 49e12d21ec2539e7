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

// Named instance families and seeded random instances.

#ifndef SEATSTAB_GENERATORS_HPP_
#define SEATSTAB_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>

#include "seatstab/core.hpp"

namespace seatstab {

struct Bundle {
  Instance instance;
  Assignment assignment;
};

// Agents s1_j, s2_j (j = 1..t) seated on K_{t,t}. Preferences: the t two-cycles
// s1_j <-> s2_j plus the two directed t-cycles s1_1 -> s1_2 -> ... -> s1_1 and
// s2_1 -> ... -> s2_1. No assignment is neighborhood stable.
// Throws kBadParameter unless t is odd and >= 3.
Instance gen_ktt(std::size_t t);

// Agents a..f with the directed 6-cycle a -> b -> ... -> f -> a on two
// disjoint triangles.
Instance gen_two_triangles();

// Agents a..d with a->b, b->d, d->c, c->a, a->d on a 4-cycle, started from
// a, b, c, d on seats 0..3. Swap dynamics from there never converge.
Bundle gen_prop1();

// Agents a..d with a<->c, b<->d, b->a, d->c on a 4-path, started from
// a, d, b, c on seats 0..3.
Bundle gen_example1();

// Seat graph families for random instances. Star, tree and gnp produce
// custom-shaped graphs.
enum class RandomShape { kCycle, kPath, kStar, kTree, kGnp };

// Throws kBadParameter for names other than cycle, path, star, tree, gnp.
RandomShape parse_random_shape(const std::string& name);

// Deterministic seat graph of the given family. kTree draws a uniform
// random recursive tree; kGnp draws each edge with probability 1/2.
SeatGraph gen_seat_graph(std::size_t n, RandomShape shape, std::uint64_t seed);

// Each ordered pair is an arc independently with probability p. Labels are
// zero-padded so label order equals index order. Same arguments, same
// instance. Throws kBadParameter for p outside [0, 1] or n incompatible with
// the shape.
Instance gen_random(std::size_t n, double p, RandomShape shape,
                    std::uint64_t seed);

// As gen_random, but arcs only run from a higher to a lower index, so the
// preference graph is acyclic.
Instance gen_random_dag(std::size_t n, double p, RandomShape shape,
                        std::uint64_t seed);

}  // namespace seatstab

#endif  // SEATSTAB_GENERATORS_HPP_
