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

// Domain types shared by every solver: agents with binary (approval)
// preferences, an undirected seat graph with one seat per agent, and
// assignments of agents to seats.
//
// Agents are addressed by 0-based index in label-sorted order. Labels only
// matter at I/O boundaries (see io.hpp).

#ifndef SEATSTAB_CORE_HPP_
#define SEATSTAB_CORE_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "seatstab/error.hpp"

namespace seatstab {

using Agent = std::size_t;
using Seat = std::size_t;

// Directed approval graph: arc (i, j) means agent i approves agent j.
class PreferenceGraph {
 public:
  PreferenceGraph() = default;
  // Duplicate arcs collapse. Throws kSelfLoop / kUnknownAgent.
  PreferenceGraph(std::size_t n, std::span<const std::pair<Agent, Agent>> arcs);

  std::size_t size() const { return n_; }
  bool approves(Agent i, Agent j) const { return matrix_[i * n_ + j] != 0; }
  // Sorted ascending.
  const std::vector<Agent>& out(Agent i) const { return out_[i]; }
  const std::vector<Agent>& in(Agent i) const { return in_[i]; }
  std::size_t arc_count() const { return arc_count_; }
  // All arcs in lexicographic order.
  std::vector<std::pair<Agent, Agent>> arcs() const;

  friend bool operator==(const PreferenceGraph& a, const PreferenceGraph& b) {
    return a.n_ == b.n_ && a.matrix_ == b.matrix_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t arc_count_ = 0;
  std::vector<std::uint8_t> matrix_;
  std::vector<std::vector<Agent>> out_;
  std::vector<std::vector<Agent>> in_;
};

enum class SeatShape { kCycle, kPath, kCustom };

std::string_view shape_name(SeatShape shape);

// Undirected simple graph on seats 0..n-1. Cycle and path shapes are
// numbered along the cycle/path, so seat i neighbours seat i+1.
class SeatGraph {
 public:
  // Sentinel for "different components".
  static constexpr std::uint32_t kUnreachable =
      std::numeric_limits<std::uint32_t>::max();
  // All-pairs distances are tabulated up to this size, computed by BFS above.
  static constexpr std::size_t kDistanceTableLimit = 512;

  SeatGraph() = default;

  static SeatGraph cycle(std::size_t n);
  static SeatGraph path(std::size_t n);
  static SeatGraph custom(std::size_t n,
                          std::span<const std::pair<Seat, Seat>> edges);

  std::size_t size() const { return n_; }
  SeatShape shape() const { return shape_; }
  bool adjacent(Seat u, Seat v) const { return matrix_[u * n_ + v] != 0; }
  const std::vector<Seat>& neighbors(Seat v) const { return adj_[v]; }
  std::size_t degree(Seat v) const { return adj_[v].size(); }
  std::size_t edge_count() const { return edge_count_; }
  // Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<Seat, Seat>> edges() const;

  // Shortest-path length, or kUnreachable.
  std::uint32_t distance(Seat u, Seat v) const;
  // Distances from `source` to every seat.
  std::vector<std::uint32_t> distances_from(Seat source) const;

  friend bool operator==(const SeatGraph& a, const SeatGraph& b) {
    return a.n_ == b.n_ && a.shape_ == b.shape_ && a.matrix_ == b.matrix_;
  }

 private:
  SeatGraph(std::size_t n, SeatShape shape,
            std::span<const std::pair<Seat, Seat>> edges);

  std::size_t n_ = 0;
  SeatShape shape_ = SeatShape::kCustom;
  std::size_t edge_count_ = 0;
  std::vector<std::uint8_t> matrix_;
  std::vector<std::vector<Seat>> adj_;
  std::vector<std::uint32_t> dist_;  // empty when n > kDistanceTableLimit
};

// Bijection agent -> seat, with its inverse kept alongside.
class Assignment {
 public:
  Assignment() = default;
  // Throws kInvalidAssignment unless seat_of is a permutation of 0..n-1.
  explicit Assignment(std::vector<Seat> seat_of);

  static Assignment identity(std::size_t n);

  std::size_t size() const { return seat_of_.size(); }
  Seat seat_of(Agent i) const { return seat_of_[i]; }
  Agent agent_at(Seat v) const { return agent_at_[v]; }
  const std::vector<Seat>& seats() const { return seat_of_; }
  const std::vector<Agent>& occupants() const { return agent_at_; }

  // The assignment with the seats of i and j exchanged. Throws kSameAgent.
  Assignment swapped(Agent i, Agent j) const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<Seat> seat_of_;
  std::vector<Agent> agent_at_;
};

class Instance {
 public:
  Instance() = default;
  // `labels` must be non-empty, unique and sorted; both graphs are indexed
  // in that order. make_instance is the label-level builder.
  // Throws kSizeMismatch / kDuplicateAgent / kMalformedDocument.
  Instance(std::vector<std::string> labels, PreferenceGraph prefs,
           SeatGraph seats);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Agent i) const { return labels_[i]; }
  // Throws kUnknownAgent.
  Agent index_of(const std::string& label) const;
  const PreferenceGraph& prefs() const { return prefs_; }
  const SeatGraph& seats() const { return seats_; }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.labels_ == b.labels_ && a.prefs_ == b.prefs_ &&
           a.seats_ == b.seats_;
  }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, Agent, std::less<>> index_;
  PreferenceGraph prefs_;
  SeatGraph seats_;
};

// Builds an instance from labels in any order and label-addressed arcs.
// Agents get indices in label-sorted order.
Instance make_instance(
    std::vector<std::string> labels,
    std::span<const std::pair<std::string, std::string>> arcs,
    SeatGraph seats);

// Occupants of the seats adjacent to the seat of `agent`, ascending.
std::vector<Agent> neighbors(const Assignment& asg, const SeatGraph& seats,
                             Agent agent);

// Free-function form of Assignment::swapped.
inline Assignment swap(const Assignment& asg, Agent i, Agent j) {
  return asg.swapped(i, j);
}

}  // namespace seatstab

#endif  // SEATSTAB_CORE_HPP_
