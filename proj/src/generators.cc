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

#include "seatstab/generators.hpp"

#include <random>
#include <utility>
#include <vector>

namespace seatstab {

namespace {

using LabelArc = std::pair<std::string, std::string>;

// 53-bit uniform in [0, 1); avoids the implementation-defined
// std::uniform_real_distribution so outputs match across standard libraries.
double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<std::string> padded_labels(std::size_t n) {
  const std::size_t width = std::to_string(n == 0 ? 0 : n - 1).size();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string digits = std::to_string(i);
    labels.push_back("x" + std::string(width - digits.size(), '0') + digits);
  }
  return labels;
}

Instance random_instance(std::size_t n, double p, RandomShape shape,
                         std::uint64_t seed, bool downward_only) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kBadParameter, "arc probability must lie in [0, 1]");
  }
  // Seat graph and arcs use independent streams so the same seed gives the
  // same preferences across shapes.
  SeatGraph seats = gen_seat_graph(n, shape, seed ^ 0x9e3779b97f4a7c15ULL);
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Agent, Agent>> arcs;
  for (Agent i = 0; i < n; ++i) {
    for (Agent j = 0; j < n; ++j) {
      if (i == j) continue;
      const bool draw = unit(rng) < p;
      if (draw && (!downward_only || i > j)) arcs.emplace_back(i, j);
    }
  }
  return Instance(padded_labels(n), PreferenceGraph(n, arcs), std::move(seats));
}

}  // namespace

Instance gen_ktt(std::size_t t) {
  if (t < 3 || t % 2 == 0) {
    throw Error(ErrorCode::kBadParameter,
                "K_{t,t} family needs an odd t >= 3, got " + std::to_string(t));
  }
  const auto name = [](int side, std::size_t j) {
    return "s" + std::to_string(side) + "_" + std::to_string(j + 1);
  };
  std::vector<std::string> labels;
  std::vector<LabelArc> arcs;
  for (int side = 1; side <= 2; ++side) {
    for (std::size_t j = 0; j < t; ++j) labels.push_back(name(side, j));
  }
  for (std::size_t j = 0; j < t; ++j) {
    arcs.emplace_back(name(1, j), name(2, j));
    arcs.emplace_back(name(2, j), name(1, j));
    for (int side = 1; side <= 2; ++side) {
      arcs.emplace_back(name(side, j), name(side, (j + 1) % t));
    }
  }
  std::vector<std::pair<Seat, Seat>> edges;
  for (Seat u = 0; u < t; ++u) {
    for (Seat v = t; v < 2 * t; ++v) edges.emplace_back(u, v);
  }
  return make_instance(std::move(labels), arcs,
                       SeatGraph::custom(2 * t, edges));
}

Instance gen_two_triangles() {
  const std::vector<LabelArc> arcs{{"a", "b"}, {"b", "c"}, {"c", "d"},
                                   {"d", "e"}, {"e", "f"}, {"f", "a"}};
  const std::vector<std::pair<Seat, Seat>> edges{{0, 1}, {1, 2}, {0, 2},
                                                 {3, 4}, {4, 5}, {3, 5}};
  return make_instance({"a", "b", "c", "d", "e", "f"}, arcs,
                       SeatGraph::custom(6, edges));
}

Bundle gen_prop1() {
  const std::vector<LabelArc> arcs{
      {"a", "b"}, {"b", "d"}, {"d", "c"}, {"c", "a"}, {"a", "d"}};
  Instance inst = make_instance({"a", "b", "c", "d"}, arcs, SeatGraph::cycle(4));
  return {std::move(inst), Assignment({0, 1, 2, 3})};
}

Bundle gen_example1() {
  const std::vector<LabelArc> arcs{{"a", "c"}, {"c", "a"}, {"b", "d"},
                                   {"d", "b"}, {"b", "a"}, {"d", "c"}};
  Instance inst = make_instance({"a", "b", "c", "d"}, arcs, SeatGraph::path(4));
  // a@0, b@2, c@3, d@1
  return {std::move(inst), Assignment({0, 2, 3, 1})};
}

RandomShape parse_random_shape(const std::string& name) {
  if (name == "cycle") return RandomShape::kCycle;
  if (name == "path") return RandomShape::kPath;
  if (name == "star") return RandomShape::kStar;
  if (name == "tree") return RandomShape::kTree;
  if (name == "gnp") return RandomShape::kGnp;
  throw Error(ErrorCode::kBadParameter, "unknown seat graph shape '" + name +
                                            "' (cycle|path|star|tree|gnp)");
}

SeatGraph gen_seat_graph(std::size_t n, RandomShape shape, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::kBadParameter, "need at least one seat");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Seat, Seat>> edges;
  switch (shape) {
    case RandomShape::kCycle:
      if (n < 3) {
        throw Error(ErrorCode::kBadParameter, "a cycle needs at least 3 seats");
      }
      return SeatGraph::cycle(n);
    case RandomShape::kPath:
      return SeatGraph::path(n);
    case RandomShape::kStar:
      for (Seat v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;
    case RandomShape::kTree:
      for (Seat v = 1; v < n; ++v) {
        edges.emplace_back(static_cast<Seat>(rng() % v), v);
      }
      break;
    case RandomShape::kGnp:
      for (Seat u = 0; u < n; ++u) {
        for (Seat v = u + 1; v < n; ++v) {
          if (unit(rng) < 0.5) edges.emplace_back(u, v);
        }
      }
      break;
  }
  return SeatGraph::custom(n, edges);
}

Instance gen_random(std::size_t n, double p, RandomShape shape,
                    std::uint64_t seed) {
  return random_instance(n, p, shape, seed, false);
}

Instance gen_random_dag(std::size_t n, double p, RandomShape shape,
                        std::uint64_t seed) {
  return random_instance(n, p, shape, seed, true);
}

}  // namespace seatstab
