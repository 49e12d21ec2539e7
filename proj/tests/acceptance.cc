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

// Acceptance suite. Prints one PASS/FAIL line per criterion.
//
//   acceptance        run every criterion
//   acceptance N      run criterion N only
//
// Exit status is 0 iff every selected criterion passed. All thresholds and
// sample sizes are fixed below; nothing is read from the environment.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "seatstab/cycle_solver.hpp"
#include "seatstab/dynamics.hpp"
#include "seatstab/general_solver.hpp"
#include "seatstab/generators.hpp"
#include "seatstab/oracle.hpp"
#include "seatstab/path_solver.hpp"
#include "seatstab/stability.hpp"

namespace seatstab {
namespace {

// ---- pinned parameters --------------------------------------------------

constexpr double kOracleSeconds = 5.0;           // criteria 1, 2
constexpr std::size_t kPropRandomSeeds = 100;     // criterion 3
constexpr std::size_t kCycleInstances = 10000;    // criteria 4, 5
constexpr std::size_t kCycleOracleChecks = 500;   // criterion 4
constexpr std::size_t kCycleOracleMaxN = 7;       // criterion 4
constexpr std::size_t kTimingSmallN = 100;        // criterion 4
constexpr std::size_t kTimingLargeN = 400;        // criterion 4
constexpr std::size_t kTimingRuns = 15;           // criterion 4, per size
constexpr double kTimingMaxRatio = 30.0;          // criterion 4
constexpr std::size_t kPathInstances = 10000;     // criterion 6
constexpr std::size_t kDagInstances = 1000;       // criterion 7
constexpr std::size_t kDfvsInstances = 500;       // criterion 7
constexpr std::size_t kGeneralMaxN = 10;          // criterion 7
constexpr std::size_t kObservationPairs = 10000;  // criterion 8
constexpr std::array<double, 5> kDensities{0.1, 0.3, 0.5, 0.7, 0.9};

// Seed offsets keep the criteria's random streams apart.
constexpr std::uint64_t kCycleSeedBase = 1'000'000;
constexpr std::uint64_t kPathSeedBase = 2'000'000;
constexpr std::uint64_t kDagSeedBase = 3'000'000;
constexpr std::uint64_t kDfvsSeedBase = 4'000'000;
constexpr std::uint64_t kObservationSeedBase = 5'000'000;
constexpr std::uint64_t kTimingSeedBase = 6'000'000;

// -------------------------------------------------------------------------

struct Verdict {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t m = xs.size() / 2;
  return xs.size() % 2 ? xs[m] : (xs[m - 1] + xs[m]) / 2.0;
}

// Fisher-Yates with the raw generator so results do not depend on the
// standard library's distribution implementations.
Assignment random_assignment(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Seat> seat_of(n);
  for (Seat v = 0; v < n; ++v) seat_of[v] = v;
  for (std::size_t i = n; i > 1; --i) std::swap(seat_of[i - 1], seat_of[rng() % i]);
  return Assignment(std::move(seat_of));
}

// The criterion-4 distribution: n cycles through 3..12, the density through
// kDensities every ten instances.
Instance cycle_instance(std::size_t idx) {
  const std::size_t n = 3 + idx % 10;
  const double p = kDensities[(idx / 10) % kDensities.size()];
  return gen_random(n, p, RandomShape::kCycle, kCycleSeedBase + idx);
}

bool stable_at(const Instance& inst, const Assignment& asg, DistanceBound b) {
  return check(inst, asg, b).stable;
}

const DistanceBound kOne = DistanceBound::at_most(1);

Verdict criterion1() {
  const Instance inst = gen_ktt(3);
  const auto start = Clock::now();
  const OracleResult r = oracle_search(inst, kOne, OracleMode::kCount,
                                       {kDefaultOracleLimit, Symmetry::kOff});
  const double secs = seconds_since(start);
  std::ostringstream d;
  d << "K_{3,3}: examined " << r.examined << ", neighborhood-stable " << r.count
    << ", " << secs << " s";
  return {r.examined == 720 && r.count == 0 && secs < kOracleSeconds, d.str()};
}

Verdict criterion2() {
  const Instance inst = gen_two_triangles();
  const auto start = Clock::now();
  const OracleResult one = oracle_search(inst, kOne, OracleMode::kCount,
                                         {kDefaultOracleLimit, Symmetry::kOff});
  const OracleResult all =
      oracle_search(inst, DistanceBound::unbounded(), OracleMode::kExists,
                    {kDefaultOracleLimit, Symmetry::kOff});
  const double secs = seconds_since(start);
  std::ostringstream d;
  d << "two triangles: count(1) = " << one.count << ", exists(unbounded) = "
    << (all.exists ? "true" : "false") << ", " << secs << " s";
  return {one.count == 720 && !all.exists && secs < kOracleSeconds, d.str()};
}

Verdict criterion3() {
  const Bundle b = gen_prop1();
  const Instance& inst = b.instance;
  const Agent a = inst.index_of("a"), bb = inst.index_of("b"),
              c = inst.index_of("c"), d = inst.index_of("d");
  const std::vector<std::pair<Agent, Agent>> expected{{bb, c}, {a, d}, {bb, c}, {a, d}};
  const DynamicsTrace first = run_dynamics(inst, b.assignment, SwapPolicy::first());
  const bool first_ok = first.outcome == Outcome::kCycled &&
                        first.swaps == expected && first.first_repeat_index &&
                        first.states.back() == first.states[*first.first_repeat_index];
  std::size_t cycled = 0;
  for (std::uint64_t seed = 0; seed < kPropRandomSeeds; ++seed) {
    const DynamicsTrace t = run_dynamics(inst, b.assignment, SwapPolicy::random(seed));
    if (t.outcome == Outcome::kCycled) ++cycled;
  }
  std::ostringstream detail;
  detail << "policy first: " << (first_ok ? "cycled after 4 swaps (b,c),(a,d),(b,c),(a,d)"
                                          : "unexpected trace")
         << "; random: " << cycled << "/" << kPropRandomSeeds << " cycled";
  return {first_ok && cycled == kPropRandomSeeds, detail.str()};
}

Verdict criterion4() {
  std::size_t failures = 0, case1 = 0, case2 = 0;
  for (std::size_t idx = 0; idx < kCycleInstances; ++idx) {
    const Instance inst = cycle_instance(idx);
    (find_case1_triple(inst.prefs()) ? case1 : case2)++;
    if (!stable_at(inst, solve_cycle(inst), kOne)) ++failures;
  }

  std::size_t oracle_checked = 0, disagreements = 0;
  for (std::size_t idx = 0; oracle_checked < kCycleOracleChecks; ++idx) {
    const Instance inst = cycle_instance(idx);
    if (inst.size() > kCycleOracleMaxN) continue;
    ++oracle_checked;
    const bool solver_found = stable_at(inst, solve_cycle(inst), kOne);
    const bool oracle_found = oracle_search(inst, kOne, OracleMode::kExists).exists;
    if (solver_found != oracle_found) ++disagreements;
  }

  const auto timed_median = [](std::size_t n) {
    std::vector<double> times;
    for (std::size_t run = 0; run < kTimingRuns; ++run) {
      const Instance inst = gen_random(n, kDensities[run % kDensities.size()],
                                       RandomShape::kCycle,
                                       kTimingSeedBase + n * 1000 + run);
      const auto start = Clock::now();
      const Assignment asg = solve_cycle(inst);
      times.push_back(seconds_since(start));
      if (asg.size() != n) std::abort();
    }
    return median(times);
  };
  timed_median(kTimingSmallN);  // warm-up
  const double small = timed_median(kTimingSmallN);
  const double large = timed_median(kTimingLargeN);
  const double ratio = large / small;

  std::ostringstream d;
  d << kCycleInstances << " cycle instances (" << case1 << " with a seeding triple, " << case2
    << " partition regime): " << failures << " unstable; oracle agreement " << oracle_checked
    << " checked, " << disagreements << " disagree; median n=" << kTimingLargeN
    << " / n=" << kTimingSmallN << " = " << ratio << "x (limit " << kTimingMaxRatio
    << "x)";
  return {failures == 0 && disagreements == 0 && ratio <= kTimingMaxRatio, d.str()};
}

Verdict criterion5() {
  std::size_t solves = 0, steps = 0, potential = 0, paths = 0, too_many = 0;
  std::size_t single_path_steps = 0;
  for (std::size_t idx = 0; idx < kCycleInstances; ++idx) {
    const Instance inst = cycle_instance(idx);
    if (find_case1_triple(inst.prefs())) continue;
    ++solves;
    const CaseTwoResult r = solve_case2_traced(inst);
    if (r.steps.size() > inst.size()) ++too_many;
    for (const ImprovementStep& s : r.steps) {
      ++steps;
      if (s.approvals_after <= s.approvals_before) ++potential;
      if (s.paths_after >= s.paths_before) ++paths;
      if (s.paths_before == 1) ++single_path_steps;
    }
  }
  std::ostringstream d;
  d << solves << " partition-regime solves, " << steps << " improvement steps: " << potential
    << " without potential increase, " << paths
    << " without path-count decrease (" << single_path_steps
    << " steps start from a single path), " << too_many
    << " solves over n iterations";
  return {potential == 0 && paths == 0 && too_many == 0, d.str()};
}

Verdict criterion6() {
  std::size_t failures = 0;
  for (std::size_t idx = 0; idx < kPathInstances; ++idx) {
    const std::size_t n = 1 + idx % 12;
    const double p = kDensities[(idx / 12) % kDensities.size()];
    const Instance inst = gen_random(n, p, RandomShape::kPath, kPathSeedBase + idx);
    const Agent seed = static_cast<Agent>((idx / 60) % n);
    if (!stable_at(inst, solve_path(inst, seed), DistanceBound::at_most(2))) ++failures;
  }
  const Instance e1 = gen_example1().instance;
  std::size_t example_failures = 0;
  for (Agent s = 0; s < e1.size(); ++s) {
    if (!stable_at(e1, solve_path(e1, s), DistanceBound::at_most(2))) ++example_failures;
  }
  std::ostringstream d;
  d << kPathInstances << " path instances: " << failures
    << " fail distance 2; path bundle seeds: " << example_failures << "/4 fail";
  return {failures == 0 && example_failures == 0, d.str()};
}

RandomShape general_shape(std::size_t idx, std::size_t n) {
  constexpr std::array<RandomShape, 5> kShapes{RandomShape::kTree, RandomShape::kStar,
                                               RandomShape::kPath, RandomShape::kGnp,
                                               RandomShape::kCycle};
  const RandomShape s = kShapes[idx % kShapes.size()];
  return s == RandomShape::kCycle && n < 3 ? RandomShape::kPath : s;
}

Verdict criterion7() {
  std::size_t dag_failures = 0, nonempty = 0;
  for (std::size_t idx = 0; idx < kDagInstances; ++idx) {
    const std::size_t n = 1 + idx % kGeneralMaxN;
    const double p = kDensities[(idx / kGeneralMaxN) % kDensities.size()];
    const Instance inst =
        gen_random_dag(n, p, general_shape(idx / 50, n), kDagSeedBase + idx);
    const GeneralSolution sol = solve_general_detailed(inst);
    if (!sol.dfvs.set.empty()) ++nonempty;
    if (!stable_at(inst, sol.assignment, DistanceBound::unbounded())) ++dag_failures;
  }

  std::size_t solved = 0, skipped = 0, dfvs_failures = 0, with_cycles = 0;
  for (std::size_t idx = 0; solved < kDfvsInstances; ++idx) {
    const std::size_t n = 2 + idx % (kGeneralMaxN - 1);
    const double p = kDensities[(idx / kGeneralMaxN) % kDensities.size()];
    const Instance inst =
        gen_random(n, p, general_shape(idx, n), kDfvsSeedBase + idx);
    const DfvsResult x = compute_dfvs(inst.prefs());
    if (x.set.size() > leaves(inst.seats()).size()) {
      ++skipped;
      continue;
    }
    ++solved;
    if (!x.set.empty()) ++with_cycles;
    const GeneralSolution sol = solve_general_detailed(inst);
    if (!stable_at(inst, sol.assignment, kOne)) ++dfvs_failures;
  }
  std::ostringstream d;
  d << kDagInstances << " acyclic instances: " << dag_failures
    << " fail unbounded (" << nonempty << " with nonempty X); " << solved
    << " instances with |X| <= #leaves (" << with_cycles << " with nonempty X, "
    << skipped << " rejected): " << dfvs_failures << " fail distance 1";
  return {dag_failures == 0 && nonempty == 0 && dfvs_failures == 0 && with_cycles > 0,
          d.str()};
}

Verdict criterion8() {
  std::size_t violations = 0, obs1_fired = 0, obs2_fired = 0;
  for (std::size_t idx = 0; idx < kObservationPairs; ++idx) {
    const std::size_t n = 3 + idx % 10;
    const double p = kDensities[(idx / 10) % kDensities.size()];
    const Instance inst =
        gen_random(n, p, RandomShape::kCycle, kObservationSeedBase + idx);
    const Assignment asg = random_assignment(n, kObservationSeedBase + idx);
    for (Seat v = 0; v < n; ++v) {
      const Agent here = asg.agent_at(v);
      const Agent left = asg.agent_at((v + n - 1) % n);
      const Agent right = asg.agent_at((v + 1) % n);
      if (obs1_holds(inst, asg, v)) {
        ++obs1_fired;
        if (is_blocking_pair(inst, asg, here, right)) ++violations;
      }
      if (obs2_nonenvy(inst, asg, v, Side::kLeft)) {
        ++obs2_fired;
        if (envies(inst, asg, here, right)) ++violations;
      }
      if (obs2_nonenvy(inst, asg, v, Side::kRight)) {
        ++obs2_fired;
        if (envies(inst, asg, here, left)) ++violations;
      }
    }
  }
  std::ostringstream d;
  d << kObservationPairs << " random cycle assignments: " << obs1_fired
    << " pair certificates, " << obs2_fired << " non-envy certificates, "
    << violations << " violations";
  return {violations == 0 && obs1_fired > 0 && obs2_fired > 0, d.str()};
}

Verdict criterion9() {
  const Bundle e1 = gen_example1();
  const Instance& inst = e1.instance;
  const Agent b = inst.index_of("b"), d = inst.index_of("d");
  const StabilityReport r = check(inst, e1.assignment, kOne);
  const bool witness_ok = !r.stable && r.witness && r.witness->i == b &&
                          r.witness->j == d && r.witness->distance == 1;
  const bool fixed_ok =
      stable_at(inst, swap(e1.assignment, b, d), DistanceBound::unbounded());
  std::ostringstream detail;
  detail << "witness " << (witness_ok ? "(b, d) at distance 1" : "wrong")
         << "; after swapping b and d: "
         << (fixed_ok ? "stable at unbounded distance" : "not stable");
  return {witness_ok && fixed_ok, detail.str()};
}

}  // namespace
}  // namespace seatstab

int main(int argc, char** argv) {
  using seatstab::Verdict;
  const std::vector<std::function<Verdict()>> criteria{
      seatstab::criterion1, seatstab::criterion2, seatstab::criterion3,
      seatstab::criterion4, seatstab::criterion5, seatstab::criterion6,
      seatstab::criterion7, seatstab::criterion8, seatstab::criterion9};
  std::vector<std::size_t> selected;
  if (argc == 1) {
    for (std::size_t i = 1; i <= criteria.size(); ++i) selected.push_back(i);
  } else {
    for (int a = 1; a < argc; ++a) {
      const long k = std::strtol(argv[a], nullptr, 10);
      if (k < 1 || k > static_cast<long>(criteria.size())) {
        std::cerr << "usage: acceptance [1-" << criteria.size() << "]...\n";
        return 2;
      }
      selected.push_back(static_cast<std::size_t>(k));
    }
  }
  bool all = true;
  for (std::size_t k : selected) {
    Verdict v;
    try {
      v = criteria[k - 1]();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    all = all && v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << k << ": "
              << v.detail << std::endl;
  }
  return all ? 0 : 1;
}
