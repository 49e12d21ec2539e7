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

#include "seatstab/core.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace seatstab {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedDocument: return "MalformedDocument";
    case ErrorCode::kUnknownAgent: return "UnknownAgent";
    case ErrorCode::kDuplicateAgent: return "DuplicateAgent";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kSizeMismatch: return "SizeMismatch";
    case ErrorCode::kInvalidAssignment: return "InvalidAssignment";
    case ErrorCode::kSameAgent: return "SameAgent";
    case ErrorCode::kNotACycle: return "NotACycle";
    case ErrorCode::kNotAPath: return "NotAPath";
    case ErrorCode::kNoInsertionPoint: return "NoInsertionPoint";
    case ErrorCode::kTypeTwoDetected: return "TypeTwoDetected";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kNotAcyclic: return "NotAcyclic";
    case ErrorCode::kInsufficientLeaves: return "InsufficientLeaves";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kBadParameter: return "BadParameter";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kInternal: return "InternalError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// PreferenceGraph

PreferenceGraph::PreferenceGraph(std::size_t n,
                                 std::span<const std::pair<Agent, Agent>> arcs)
    : n_(n), matrix_(n * n, 0), out_(n), in_(n) {
  for (const auto& [i, j] : arcs) {
    if (i >= n || j >= n) {
      throw Error(ErrorCode::kUnknownAgent,
                  "arc (" + std::to_string(i) + ", " + std::to_string(j) +
                      ") references an agent outside 0.." +
                      std::to_string(n == 0 ? 0 : n - 1));
    }
    if (i == j) {
      throw Error(ErrorCode::kSelfLoop,
                  "agent " + std::to_string(i) + " cannot approve itself");
    }
    matrix_[i * n + j] = 1;
  }
  for (Agent i = 0; i < n; ++i) {
    for (Agent j = 0; j < n; ++j) {
      if (matrix_[i * n + j] != 0) {
        out_[i].push_back(j);
        in_[j].push_back(i);
        ++arc_count_;
      }
    }
  }
}

std::vector<std::pair<Agent, Agent>> PreferenceGraph::arcs() const {
  std::vector<std::pair<Agent, Agent>> result;
  result.reserve(arc_count_);
  for (Agent i = 0; i < n_; ++i) {
    for (Agent j : out_[i]) result.emplace_back(i, j);
  }
  return result;
}

// ---------------------------------------------------------------------------
// SeatGraph

std::string_view shape_name(SeatShape shape) {
  switch (shape) {
    case SeatShape::kCycle: return "cycle";
    case SeatShape::kPath: return "path";
    case SeatShape::kCustom: return "custom";
  }
  return "custom";
}

SeatGraph::SeatGraph(std::size_t n, SeatShape shape,
                     std::span<const std::pair<Seat, Seat>> edges)
    : n_(n), shape_(shape), matrix_(n * n, 0), adj_(n) {
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::kMalformedDocument,
                  "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                      ") references a seat outside 0.." +
                      std::to_string(n == 0 ? 0 : n - 1));
    }
    if (u == v) {
      throw Error(ErrorCode::kSelfLoop,
                  "seat " + std::to_string(u) + " has a self-loop");
    }
    matrix_[u * n + v] = 1;
    matrix_[v * n + u] = 1;
  }
  for (Seat u = 0; u < n; ++u) {
    for (Seat v = 0; v < n; ++v) {
      if (matrix_[u * n + v] != 0) adj_[u].push_back(v);
    }
    edge_count_ += adj_[u].size();
  }
  edge_count_ /= 2;

  if (n <= kDistanceTableLimit) {
    std::vector<std::uint32_t> table(n * n);
    for (Seat s = 0; s < n; ++s) {
      auto row = distances_from(s);  // BFS while dist_ is still empty
      std::copy(row.begin(), row.end(), table.begin() + s * n);
    }
    dist_ = std::move(table);
  }
}

SeatGraph SeatGraph::cycle(std::size_t n) {
  if (n < 3) {
    throw Error(ErrorCode::kShapeMismatch,
                "a cycle seat graph needs at least 3 seats, got " +
                    std::to_string(n));
  }
  std::vector<std::pair<Seat, Seat>> edges;
  for (Seat v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return SeatGraph(n, SeatShape::kCycle, edges);
}

SeatGraph SeatGraph::path(std::size_t n) {
  if (n < 1) {
    throw Error(ErrorCode::kShapeMismatch, "a path seat graph needs a seat");
  }
  std::vector<std::pair<Seat, Seat>> edges;
  for (Seat v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return SeatGraph(n, SeatShape::kPath, edges);
}

SeatGraph SeatGraph::custom(std::size_t n,
                            std::span<const std::pair<Seat, Seat>> edges) {
  if (n < 1) {
    throw Error(ErrorCode::kShapeMismatch, "a seat graph needs a seat");
  }
  return SeatGraph(n, SeatShape::kCustom, edges);
}

std::vector<std::pair<Seat, Seat>> SeatGraph::edges() const {
  std::vector<std::pair<Seat, Seat>> result;
  result.reserve(edge_count_);
  for (Seat u = 0; u < n_; ++u) {
    for (Seat v : adj_[u]) {
      if (u < v) result.emplace_back(u, v);
    }
  }
  return result;
}

std::vector<std::uint32_t> SeatGraph::distances_from(Seat source) const {
  if (!dist_.empty()) {
    return {dist_.begin() + source * n_, dist_.begin() + (source + 1) * n_};
  }
  std::vector<std::uint32_t> dist(n_, kUnreachable);
  std::deque<Seat> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Seat u = queue.front();
    queue.pop_front();
    for (Seat v : adj_[u]) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::uint32_t SeatGraph::distance(Seat u, Seat v) const {
  if (!dist_.empty()) return dist_[u * n_ + v];
  return distances_from(u)[v];
}

// ---------------------------------------------------------------------------
// Assignment

Assignment::Assignment(std::vector<Seat> seat_of)
    : seat_of_(std::move(seat_of)),
      agent_at_(seat_of_.size(), seat_of_.size()) {
  const std::size_t n = seat_of_.size();
  for (Agent i = 0; i < n; ++i) {
    const Seat v = seat_of_[i];
    if (v >= n || agent_at_[v] != n) {
      throw Error(ErrorCode::kInvalidAssignment,
                  "assignment is not a bijection onto seats 0.." +
                      std::to_string(n == 0 ? 0 : n - 1));
    }
    agent_at_[v] = i;
  }
}

Assignment Assignment::identity(std::size_t n) {
  std::vector<Seat> seats(n);
  for (Seat v = 0; v < n; ++v) seats[v] = v;
  return Assignment(std::move(seats));
}

Assignment Assignment::swapped(Agent i, Agent j) const {
  if (i == j) {
    throw Error(ErrorCode::kSameAgent,
                "cannot swap agent " + std::to_string(i) + " with itself");
  }
  Assignment result = *this;
  std::swap(result.seat_of_[i], result.seat_of_[j]);
  result.agent_at_[result.seat_of_[i]] = i;
  result.agent_at_[result.seat_of_[j]] = j;
  return result;
}

// ---------------------------------------------------------------------------
// Instance

Instance::Instance(std::vector<std::string> labels, PreferenceGraph prefs,
                   SeatGraph seats)
    : labels_(std::move(labels)),
      prefs_(std::move(prefs)),
      seats_(std::move(seats)) {
  if (labels_.empty()) {
    throw Error(ErrorCode::kMalformedDocument, "instance has no agents");
  }
  if (labels_.size() != prefs_.size() || labels_.size() != seats_.size()) {
    throw Error(ErrorCode::kSizeMismatch,
                std::to_string(labels_.size()) + " agents but " +
                    std::to_string(seats_.size()) + " seats");
  }
  for (Agent i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) {
      throw Error(ErrorCode::kMalformedDocument, "agent labels must be non-empty");
    }
    if (i > 0 && labels_[i - 1] >= labels_[i]) {
      if (labels_[i - 1] == labels_[i]) {
        throw Error(ErrorCode::kDuplicateAgent,
                    "duplicate agent label '" + labels_[i] + "'");
      }
      throw Error(ErrorCode::kMalformedDocument, "agent labels must be sorted");
    }
    index_.emplace(labels_[i], i);
  }
}

Agent Instance::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) {
    throw Error(ErrorCode::kUnknownAgent, "unknown agent '" + label + "'");
  }
  return it->second;
}

Instance make_instance(
    std::vector<std::string> labels,
    std::span<const std::pair<std::string, std::string>> arcs,
    SeatGraph seats) {
  std::sort(labels.begin(), labels.end());
  auto dup = std::adjacent_find(labels.begin(), labels.end());
  if (dup != labels.end()) {
    throw Error(ErrorCode::kDuplicateAgent,
                "duplicate agent label '" + *dup + "'");
  }
  auto lookup = [&](const std::string& label) -> Agent {
    auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label) {
      throw Error(ErrorCode::kUnknownAgent,
                  "preference references undeclared agent '" + label + "'");
    }
    return static_cast<Agent>(it - labels.begin());
  };
  std::vector<std::pair<Agent, Agent>> indexed;
  indexed.reserve(arcs.size());
  for (const auto& [from, to] : arcs) {
    if (from == to) {
      // Report before the lookup so an undeclared self-loop still reads
      // as a self-loop.
      throw Error(ErrorCode::kSelfLoop,
                  "agent '" + from + "' cannot approve itself");
    }
    indexed.emplace_back(lookup(from), lookup(to));
  }
  const std::size_t n = labels.size();
  return Instance(std::move(labels), PreferenceGraph(n, indexed),
                  std::move(seats));
}

std::vector<Agent> neighbors(const Assignment& asg, const SeatGraph& seats,
                             Agent agent) {
  std::vector<Agent> result;
  for (Seat v : seats.neighbors(asg.seat_of(agent))) {
    result.push_back(asg.agent_at(v));
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace seatstab
