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

#include "seatstab/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <utility>
#include <vector>

namespace seatstab {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedDocument, what);
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

const Json& require(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) malformed(std::string("missing key \"") + key + "\"");
  return *it;
}

std::size_t as_index(const Json& value, const char* what) {
  if (!value.is_number_integer() || value.get<long long>() < 0) {
    malformed(std::string(what) + " must be a non-negative integer");
  }
  return value.get<std::size_t>();
}

std::vector<std::pair<Seat, Seat>> normalized(
    std::vector<std::pair<Seat, Seat>> edges) {
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

SeatGraph seat_graph_from_json(const Json& sg, std::size_t agent_count) {
  if (!sg.is_object()) malformed("\"seat_graph\" must be an object");
  const Json& shape_json = require(sg, "shape");
  if (!shape_json.is_string()) malformed("\"shape\" must be a string");
  const std::string shape = shape_json.get<std::string>();
  if (shape != "cycle" && shape != "path" && shape != "custom") {
    malformed("unknown seat graph shape \"" + shape + "\"");
  }
  const std::size_t n = as_index(require(sg, "n"), "\"n\"");
  if (n != agent_count) {
    throw Error(ErrorCode::kSizeMismatch,
                std::to_string(agent_count) + " agents but " +
                    std::to_string(n) + " seats");
  }

  std::optional<std::vector<std::pair<Seat, Seat>>> edges;
  if (auto it = sg.find("edges"); it != sg.end()) {
    if (!it->is_array()) malformed("\"edges\" must be an array");
    edges.emplace();
    for (const Json& e : *it) {
      if (!e.is_array() || e.size() != 2) {
        malformed("each edge must be a pair of seat indices");
      }
      const Seat u = as_index(e[0], "edge endpoint");
      const Seat v = as_index(e[1], "edge endpoint");
      if (u == v) {
        throw Error(ErrorCode::kSelfLoop,
                    "seat " + std::to_string(u) + " has a self-loop");
      }
      edges->emplace_back(u, v);
    }
  }

  if (shape == "custom") {
    if (!edges) malformed("custom seat graphs need \"edges\"");
    return SeatGraph::custom(n, *edges);
  }
  SeatGraph g = shape == "cycle" ? SeatGraph::cycle(n) : SeatGraph::path(n);
  if (edges && normalized(*edges) != g.edges()) {
    throw Error(ErrorCode::kShapeMismatch,
                "edges do not form the canonical " + shape + " on " +
                    std::to_string(n) + " seats");
  }
  return g;
}

}  // namespace

Instance instance_from_json(const Json& doc) {
  if (!doc.is_object()) malformed("instance document must be an object");
  const Json& agents_json = require(doc, "agents");
  if (!agents_json.is_array()) malformed("\"agents\" must be an array");
  std::vector<std::string> labels;
  for (const Json& a : agents_json) {
    if (!a.is_string() || a.get<std::string>().empty()) {
      malformed("agent labels must be non-empty strings");
    }
    labels.push_back(a.get<std::string>());
  }

  const Json& prefs_json = require(doc, "preferences");
  if (!prefs_json.is_array()) malformed("\"preferences\" must be an array");
  std::vector<std::pair<std::string, std::string>> arcs;
  for (const Json& arc : prefs_json) {
    if (!arc.is_array() || arc.size() != 2 || !arc[0].is_string() ||
        !arc[1].is_string()) {
      malformed("each preference must be a pair of agent labels");
    }
    arcs.emplace_back(arc[0].get<std::string>(), arc[1].get<std::string>());
  }

  SeatGraph seats = seat_graph_from_json(require(doc, "seat_graph"),
                                         labels.size());
  return make_instance(std::move(labels), arcs, std::move(seats));
}

Instance parse_instance(std::string_view text) {
  return instance_from_json(parse_json(text));
}

Json instance_to_json(const Instance& inst) {
  Json doc;
  doc["agents"] = inst.labels();
  Json arcs = Json::array();
  for (const auto& [i, j] : inst.prefs().arcs()) {
    arcs.push_back({inst.label(i), inst.label(j)});
  }
  doc["preferences"] = std::move(arcs);
  Json sg;
  sg["shape"] = std::string(shape_name(inst.seats().shape()));
  sg["n"] = inst.seats().size();
  if (inst.seats().shape() == SeatShape::kCustom) {
    Json edges = Json::array();
    for (const auto& [u, v] : inst.seats().edges()) edges.push_back({u, v});
    sg["edges"] = std::move(edges);
  }
  doc["seat_graph"] = std::move(sg);
  return doc;
}

std::string serialize_instance(const Instance& inst) {
  return instance_to_json(inst).dump();
}

Assignment assignment_from_json(const Json& doc, const Instance& inst) {
  if (!doc.is_object()) malformed("assignment document must be an object");
  const Json& map = require(doc, "assignment");
  if (!map.is_object()) malformed("\"assignment\" must be an object");
  const std::size_t n = inst.size();
  std::vector<Seat> seat_of(n, n);
  for (const auto& [label, seat] : map.items()) {
    const Agent a = inst.index_of(label);
    const Seat v = as_index(seat, "seat");
    if (v >= n) {
      throw Error(ErrorCode::kInvalidAssignment,
                  "seat " + std::to_string(v) + " does not exist");
    }
    seat_of[a] = v;
  }
  for (Agent a = 0; a < n; ++a) {
    if (seat_of[a] == n) {
      throw Error(ErrorCode::kInvalidAssignment,
                  "agent '" + inst.label(a) + "' has no seat");
    }
  }
  return Assignment(std::move(seat_of));
}

Assignment parse_assignment(std::string_view text, const Instance& inst) {
  return assignment_from_json(parse_json(text), inst);
}

Json assignment_map(const Instance& inst, const Assignment& asg) {
  Json map = Json::object();
  for (Agent a = 0; a < inst.size(); ++a) map[inst.label(a)] = asg.seat_of(a);
  return map;
}

Json assignment_to_json(const Instance& inst, const Assignment& asg) {
  Json doc;
  doc["assignment"] = assignment_map(inst, asg);
  return doc;
}

DistanceBound parse_distance_bound(std::string_view text) {
  if (text == "unbounded") return DistanceBound::unbounded();
  std::uint32_t d = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), d);
  if (ec != std::errc() || ptr != text.data() + text.size() || d == 0) {
    throw Error(ErrorCode::kBadParameter,
                "distance must be a positive integer or \"unbounded\", got \"" +
                    std::string(text) + "\"");
  }
  return DistanceBound::at_most(d);
}

Json distance_bound_to_json(DistanceBound bound) {
  if (bound.is_unbounded()) return "unbounded";
  return bound.limit();
}

Json report_to_json(const Instance& inst, const StabilityReport& report) {
  Json doc;
  doc["distance_bound"] = distance_bound_to_json(report.bound);
  doc["stable"] = report.stable;
  if (report.witness) {
    Json w;
    w["i"] = inst.label(report.witness->i);
    w["j"] = inst.label(report.witness->j);
    if (report.witness->distance == SeatGraph::kUnreachable) {
      w["distance"] = nullptr;
    } else {
      w["distance"] = report.witness->distance;
    }
    doc["witness"] = std::move(w);
  } else {
    doc["witness"] = nullptr;
  }
  return doc;
}

Json partition_to_json(const Instance& inst, const PathPartition& part) {
  Json paths = Json::array();
  for (const auto& p : part.paths) {
    Json labels = Json::array();
    for (Agent a : p.vertices) labels.push_back(inst.label(a));
    paths.push_back(std::move(labels));
  }
  return paths;
}

Json trace_to_json(const Instance& inst, const DynamicsTrace& trace) {
  Json doc;
  doc["policy"] = trace.policy.kind == SwapPolicy::Kind::kFirst
                      ? std::string("first")
                      : "random:" + std::to_string(trace.policy.seed);
  doc["max_steps"] = trace.max_steps;
  switch (trace.outcome) {
    case Outcome::kConverged: doc["outcome"] = "converged"; break;
    case Outcome::kCycled: doc["outcome"] = "cycled"; break;
    case Outcome::kCapped: doc["outcome"] = "capped"; break;
  }
  if (trace.first_repeat_index) {
    doc["first_repeat_index"] = *trace.first_repeat_index;
  } else {
    doc["first_repeat_index"] = nullptr;
  }
  doc["steps"] = trace.swaps.size();
  Json swaps = Json::array();
  for (const auto& [i, j] : trace.swaps) {
    swaps.push_back({inst.label(i), inst.label(j)});
  }
  doc["swaps"] = std::move(swaps);
  Json states = Json::array();
  for (const auto& s : trace.states) states.push_back(assignment_map(inst, s));
  doc["states"] = std::move(states);
  return doc;
}

Json oracle_to_json(const Instance& inst, DistanceBound bound,
                    const OracleResult& result) {
  Json doc;
  switch (result.mode) {
    case OracleMode::kExists: doc["mode"] = "exists"; break;
    case OracleMode::kCount: doc["mode"] = "count"; break;
    case OracleMode::kEnumerate: doc["mode"] = "enumerate"; break;
  }
  doc["distance_bound"] = distance_bound_to_json(bound);
  doc["exists"] = result.exists;
  if (result.mode != OracleMode::kExists) doc["count"] = result.count;
  if (result.mode == OracleMode::kEnumerate) {
    Json list = Json::array();
    for (const auto& a : result.stable) list.push_back(assignment_map(inst, a));
    doc["assignments"] = std::move(list);
  }
  doc["examined"] = result.examined;
  doc["symmetry_pruned"] = result.pruned;
  return doc;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string preferences_to_dot(const Instance& inst,
                               const std::optional<Assignment>& asg) {
  std::ostringstream out;
  out << "digraph preferences {\n";
  for (Agent a = 0; a < inst.size(); ++a) {
    out << "  " << quoted(inst.label(a));
    if (asg) {
      out << " [label="
          << quoted(inst.label(a) + " @ v" + std::to_string(asg->seat_of(a)))
          << "]";
    }
    out << ";\n";
  }
  for (const auto& [i, j] : inst.prefs().arcs()) {
    out << "  " << quoted(inst.label(i)) << " -> " << quoted(inst.label(j))
        << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string seats_to_dot(const Instance& inst,
                         const std::optional<Assignment>& asg) {
  std::ostringstream out;
  out << "graph seats {\n";
  for (Seat v = 0; v < inst.seats().size(); ++v) {
    std::string label = "v" + std::to_string(v);
    if (asg) label += ": " + inst.label(asg->agent_at(v));
    out << "  " << v << " [label=" << quoted(label) << "];\n";
  }
  for (const auto& [u, v] : inst.seats().edges()) {
    out << "  " << u << " -- " << v << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace seatstab
