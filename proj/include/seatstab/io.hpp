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

// External formats.
//
// Instance document:
//
//   { "agents": ["a", "b", ...],
//     "preferences": [["a", "c"], ...],        // a approves c
//     "seat_graph": { "shape": "cycle" | "path" | "custom",
//                     "n": 4,
//                     "edges": [[0, 1], ...] } }  // custom only
//
// Cycle and path seat graphs may carry "edges"; they must then be exactly the
// canonical cycle/path. The canonical serialisation omits them.
//
// Assignment document: { "assignment": { "a": 0, "b": 2, ... } }.

#ifndef SEATSTAB_IO_HPP_
#define SEATSTAB_IO_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "seatstab/core.hpp"
#include "seatstab/dynamics.hpp"
#include "seatstab/oracle.hpp"
#include "seatstab/path_partition.hpp"
#include "seatstab/stability.hpp"

namespace seatstab {

using Json = nlohmann::ordered_json;

// Throws kMalformedDocument for syntax or schema errors and the validation
// errors of the core types (kUnknownAgent, kShapeMismatch, kSelfLoop,
// kSizeMismatch, kDuplicateAgent).
Instance parse_instance(std::string_view text);
Instance instance_from_json(const Json& doc);
Json instance_to_json(const Instance& inst);
// Canonical compact form: sorted agents, arcs in index order.
std::string serialize_instance(const Instance& inst);

Assignment parse_assignment(std::string_view text, const Instance& inst);
Assignment assignment_from_json(const Json& doc, const Instance& inst);
// The label -> seat map, without the outer "assignment" key.
Json assignment_map(const Instance& inst, const Assignment& asg);
Json assignment_to_json(const Instance& inst, const Assignment& asg);

// "unbounded" or a positive integer. Throws kBadParameter.
DistanceBound parse_distance_bound(std::string_view text);
Json distance_bound_to_json(DistanceBound bound);

Json report_to_json(const Instance& inst, const StabilityReport& report);
Json partition_to_json(const Instance& inst, const PathPartition& part);
Json trace_to_json(const Instance& inst, const DynamicsTrace& trace);
Json oracle_to_json(const Instance& inst, DistanceBound bound,
                    const OracleResult& result);

// Graphviz renderings. With an assignment, agent vertices show their seat and
// seat vertices show their occupant.
std::string preferences_to_dot(const Instance& inst,
                               const std::optional<Assignment>& asg);
std::string seats_to_dot(const Instance& inst,
                         const std::optional<Assignment>& asg);

}  // namespace seatstab

#endif  // SEATSTAB_IO_HPP_
