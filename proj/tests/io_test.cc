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


#include <string>
#include <vector>

#include "doctest.h"
#include "seatstab/generators.hpp"
#include "seatstab/io.hpp"

namespace seatstab {
namespace {

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kInternal;
}

ErrorCode parse_code(const std::string& text) {
  return code_of([&] { parse_instance(text); });
}

const char* kExample1 = R"({
  "agents": ["a", "b", "c", "d"],
  "preferences": [["a","c"],["c","a"],["b","d"],["d","b"],["b","a"],["d","c"]],
  "seat_graph": {"shape": "path", "n": 4}
})";

TEST_CASE("parse the path bundle document") {
  const Instance inst = parse_instance(kExample1);
  CHECK(inst.size() == 4);
  CHECK(inst.prefs().arc_count() == 6);
  CHECK(inst.seats().edge_count() == 3);
  CHECK(inst == gen_example1().instance);
}

TEST_CASE("parse minimal instance") {
  const Instance inst = parse_instance(
      R"({"agents":["x"],"preferences":[],"seat_graph":{"shape":"path","n":1}})");
  CHECK(inst.size() == 1);
}

TEST_CASE("instance validation") {
  CHECK(parse_code(R"({"agents":["a","b"],"preferences":[["a","a"]],)"
                   R"("seat_graph":{"shape":"path","n":2}})") == ErrorCode::kSelfLoop);
  CHECK(parse_code("{") == ErrorCode::kMalformedDocument);
  CHECK(parse_code("[]") == ErrorCode::kMalformedDocument);
  CHECK(parse_code(R"({"agents":["a"],"seat_graph":{"shape":"path","n":1}})") ==
        ErrorCode::kMalformedDocument);
  CHECK(parse_code(R"({"agents":[1],"preferences":[],)"
                   R"("seat_graph":{"shape":"path","n":1}})") ==
        ErrorCode::kMalformedDocument);
  CHECK(parse_code(R"({"agents":["a","b"],"preferences":[["a"]],)"
                   R"("seat_graph":{"shape":"path","n":2}})") ==
        ErrorCode::kMalformedDocument);
  CHECK(parse_code(R"({"agents":["a","b"],"preferences":[["a","z"]],)"
                   R"("seat_graph":{"shape":"path","n":2}})") ==
        ErrorCode::kUnknownAgent);
  CHECK(parse_code(R"({"agents":["a","a"],"preferences":[],)"
                   R"("seat_graph":{"shape":"path","n":2}})") ==
        ErrorCode::kDuplicateAgent);
  CHECK(parse_code(R"({"agents":["a","b"],"preferences":[],)"
                   R"("seat_graph":{"shape":"path","n":3}})") ==
        ErrorCode::kSizeMismatch);
  CHECK(parse_code(R"({"agents":["a","b"],"preferences":[],)"
                   R"("seat_graph":{"shape":"cycle","n":2}})") ==
        ErrorCode::kShapeMismatch);
  CHECK(parse_code(R"({"agents":["a","b","c"],"preferences":[],)"
                   R"("seat_graph":{"shape":"path","n":3,"edges":[[0,2],[1,2]]}})") ==
        ErrorCode::kShapeMismatch);
  CHECK(parse_code(R"({"agents":["a","b","c"],"preferences":[],)"
                   R"("seat_graph":{"shape":"custom","n":3}})") ==
        ErrorCode::kMalformedDocument);
  CHECK(parse_code(R"({"agents":["a","b","c"],"preferences":[],)"
                   R"("seat_graph":{"shape":"custom","n":3,"edges":[[0,5]]}})") ==
        ErrorCode::kMalformedDocument);
  CHECK(parse_code(R"({"agents":["a","b","c"],"preferences":[],)"
                   R"("seat_graph":{"shape":"custom","n":3,"edges":[[1,1]]}})") ==
        ErrorCode::kSelfLoop);
  CHECK(parse_code(R"({"agents":["a","b","c"],"preferences":[],)"
                   R"("seat_graph":{"shape":"torus","n":3}})") ==
        ErrorCode::kMalformedDocument);
  CHECK(parse_code(R"({"agents":["a","b","c"],"preferences":[],)"
                   R"("seat_graph":{"shape":"path","n":-3}})") ==
        ErrorCode::kMalformedDocument);
}

TEST_CASE("canonical edges may be spelled out") {
  const Instance inst = parse_instance(
      R"({"agents":["a","b","c"],"preferences":[],)"
      R"("seat_graph":{"shape":"cycle","n":3,"edges":[[2,0],[1,2],[0,1]]}})");
  CHECK(inst.seats().shape() == SeatShape::kCycle);
  CHECK(serialize_instance(inst) ==
        R"({"agents":["a","b","c"],"preferences":[],"seat_graph":{"shape":"cycle","n":3}})");
}

TEST_CASE("serialisation round-trips") {
  const RandomShape shapes[] = {RandomShape::kCycle, RandomShape::kPath,
                                RandomShape::kStar, RandomShape::kTree,
                                RandomShape::kGnp};
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Instance inst = gen_random(3 + seed % 9, 0.1 * (seed % 10),
                                     shapes[seed % 5], seed);
    const std::string text = serialize_instance(inst);
    const Instance back = parse_instance(text);
    CHECK(back == inst);
    CHECK(serialize_instance(back) == text);
  }
  const Instance k = gen_ktt(3);
  CHECK(parse_instance(instance_to_json(k).dump(2)) == k);
}

TEST_CASE("unsorted agents are canonicalised") {
  const Instance inst = parse_instance(
      R"({"agents":["b","a"],"preferences":[["b","a"]],"seat_graph":{"shape":"path","n":2}})");
  CHECK(serialize_instance(inst) ==
        R"({"agents":["a","b"],"preferences":[["b","a"]],"seat_graph":{"shape":"path","n":2}})");
}

TEST_CASE("assignments") {
  const Instance inst = gen_example1().instance;
  const Assignment asg = parse_assignment(R"({"assignment":{"a":0,"d":1,"b":2,"c":3}})", inst);
  CHECK(asg == gen_example1().assignment);
  CHECK(assignment_to_json(inst, asg).dump() ==
        R"({"assignment":{"a":0,"b":2,"c":3,"d":1}})");
  const auto bad = [&](const std::string& text) {
    return code_of([&] { parse_assignment(text, inst); });
  };
  CHECK(bad(R"({"assignment":{"a":0,"b":2,"c":3}})") == ErrorCode::kInvalidAssignment);
  CHECK(bad(R"({"assignment":{"a":0,"b":0,"c":3,"d":1}})") ==
        ErrorCode::kInvalidAssignment);
  CHECK(bad(R"({"assignment":{"a":0,"b":2,"c":4,"d":1}})") ==
        ErrorCode::kInvalidAssignment);
  CHECK(bad(R"({"assignment":{"a":0,"b":2,"c":3,"e":1}})") == ErrorCode::kUnknownAgent);
  CHECK(bad(R"({"assignment":{"a":"x","b":2,"c":3,"d":1}})") ==
        ErrorCode::kMalformedDocument);
  CHECK(bad(R"({"seats":{}})") == ErrorCode::kMalformedDocument);
}

TEST_CASE("distance bounds") {
  CHECK(parse_distance_bound("unbounded").is_unbounded());
  CHECK(parse_distance_bound("2").limit() == 2);
  CHECK_THROWS_AS(parse_distance_bound("0"), Error);
  CHECK_THROWS_AS(parse_distance_bound("two"), Error);
  CHECK_THROWS_AS(parse_distance_bound("2x"), Error);
  CHECK(distance_bound_to_json(DistanceBound::unbounded()) == "unbounded");
}

TEST_CASE("report json") {
  const Bundle e1 = gen_example1();
  const StabilityReport r = check(e1.instance, e1.assignment, DistanceBound::at_most(1));
  CHECK(report_to_json(e1.instance, r).dump() ==
        R"({"distance_bound":1,"stable":false,"witness":{"i":"b","j":"d","distance":1}})");
  const StabilityReport ok =
      check(e1.instance, swap(e1.assignment, 1, 3), DistanceBound::unbounded());
  CHECK(report_to_json(e1.instance, ok).dump() ==
        R"({"distance_bound":"unbounded","stable":true,"witness":null})");
  const Instance tt = gen_two_triangles();
  const StabilityReport far =
      check(tt, Assignment::identity(6), DistanceBound::unbounded());
  CHECK(report_to_json(tt, far)["witness"]["distance"].is_null());
}

TEST_CASE("dot output") {
  const Bundle e1 = gen_example1();
  const std::string prefs = preferences_to_dot(e1.instance, e1.assignment);
  CHECK(prefs.rfind("digraph", 0) == 0);
  CHECK(prefs.find("\"b\" -> \"d\"") != std::string::npos);
  const std::string seats = seats_to_dot(e1.instance, std::nullopt);
  CHECK(seats.find("0 -- 1") != std::string::npos);
}

}  // namespace
}  // namespace seatstab
