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

#include "seatstab/cli.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string_view>

#include "CLI11.hpp"
#include "seatstab/cycle_solver.hpp"
#include "seatstab/dynamics.hpp"
#include "seatstab/error.hpp"
#include "seatstab/general_solver.hpp"
#include "seatstab/generators.hpp"
#include "seatstab/io.hpp"
#include "seatstab/oracle.hpp"
#include "seatstab/path_solver.hpp"
#include "seatstab/stability.hpp"

namespace seatstab {

namespace {

struct Options {
  bool pretty = false;
  bool version = false;
  std::string instance;
  std::string assignment;
  // solve
  std::string method = "auto";
  std::string seed;
  std::string dfvs;
  std::size_t dfvs_budget = kDefaultDfvsBudget;
  // check / oracle
  std::string distance;
  std::string mode = "exists";
  std::size_t limit = kDefaultOracleLimit;
  std::string symmetry = "auto";
  // dynamics
  std::string policy = "first";
  std::optional<std::size_t> max_steps;
  // gen
  std::string family;
  // dot
  bool raw = false;
};

std::string read_file(const std::string& path) {
  if (path.empty()) throw Error(ErrorCode::kIo, "no input file given");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "error while reading '" + path + "'");
  return buf.str();
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <typename T>
T parse_number(std::string_view text, const char* what) {
  T value{};
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kBadParameter, std::string("invalid ") + what +
                                              " '" + std::string(text) + "'");
  }
  return value;
}

double parse_probability(const std::string& text) {
  std::size_t used = 0;
  double p = 0.0;
  try {
    p = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) {
    throw Error(ErrorCode::kBadParameter, "invalid probability '" + text + "'");
  }
  return p;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInsufficientLeaves:
    case ErrorCode::kBudgetExceeded:
    case ErrorCode::kTooLarge:
      return kExitPrecondition;
    case ErrorCode::kInternal:
    case ErrorCode::kTypeTwoDetected:
      return kExitInternal;
    default:
      return kExitInput;
  }
}

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  int solve() {
    const Instance inst = parse_instance(read_file(opt_.instance));
    std::string method = opt_.method;
    if (method == "auto") {
      switch (inst.seats().shape()) {
        case SeatShape::kCycle: method = "cycle"; break;
        case SeatShape::kPath: method = "path"; break;
        case SeatShape::kCustom: method = "general"; break;
      }
    }
    if (!opt_.seed.empty() && method != "path") {
      throw Error(ErrorCode::kBadParameter, "--seed only applies to --method path");
    }
    if ((!opt_.dfvs.empty()) && method != "general") {
      throw Error(ErrorCode::kBadParameter,
                  "--dfvs only applies to --method general");
    }

    Json doc;
    doc["method"] = method;
    std::optional<Assignment> asg;
    DistanceBound bound = DistanceBound::at_most(1);
    if (method == "cycle") {
      asg = solve_cycle(inst);
    } else if (method == "path") {
      std::optional<Agent> seed;
      if (!opt_.seed.empty()) seed = inst.index_of(opt_.seed);
      asg = solve_path(inst, seed);
      bound = DistanceBound::at_most(2);
    } else if (method == "general") {
      std::optional<std::vector<Agent>> supplied;
      if (!opt_.dfvs.empty()) {
        supplied.emplace();
        for (const auto& label : split(opt_.dfvs, ',')) {
          supplied->push_back(inst.index_of(label));
        }
      }
      GeneralSolution sol =
          solve_general_detailed(inst, supplied, opt_.dfvs_budget);
      Json dfvs = Json::array();
      for (Agent a : sol.dfvs.set) dfvs.push_back(inst.label(a));
      doc["dfvs"] = std::move(dfvs);
      doc["dfvs_exact"] = sol.dfvs.exact;
      if (sol.dfvs.set.empty()) bound = DistanceBound::unbounded();
      asg = std::move(sol.assignment);
    } else {
      throw Error(ErrorCode::kBadParameter,
                  "unknown method '" + method + "' (auto|cycle|path|general)");
    }
    const StabilityReport report = check(inst, *asg, bound);
    doc["assignment"] = assignment_map(inst, *asg);
    doc["report"] = report_to_json(inst, report);
    if (!report.stable) {
      throw Error(ErrorCode::kInternal, "solver output failed its own check");
    }
    emit(doc);
    return kExitOk;
  }

  int check_cmd() {
    const Instance inst = parse_instance(read_file(opt_.instance));
    const Assignment asg = parse_assignment(read_file(opt_.assignment), inst);
    const DistanceBound bound = opt_.distance.empty()
                                    ? DistanceBound::at_most(1)
                                    : parse_distance_bound(opt_.distance);
    emit(report_to_json(inst, check(inst, asg, bound)));
    return kExitOk;
  }

  int oracle() {
    const Instance inst = parse_instance(read_file(opt_.instance));
    const DistanceBound bound = opt_.distance.empty()
                                    ? DistanceBound::at_most(1)
                                    : parse_distance_bound(opt_.distance);
    OracleMode mode;
    if (opt_.mode == "exists") {
      mode = OracleMode::kExists;
    } else if (opt_.mode == "count") {
      mode = OracleMode::kCount;
    } else if (opt_.mode == "enumerate") {
      mode = OracleMode::kEnumerate;
    } else {
      throw Error(ErrorCode::kBadParameter,
                  "unknown mode '" + opt_.mode + "' (exists|count|enumerate)");
    }
    OracleOptions options;
    options.limit = opt_.limit;
    if (opt_.symmetry == "auto") {
      options.symmetry = Symmetry::kAuto;
    } else if (opt_.symmetry == "off") {
      options.symmetry = Symmetry::kOff;
    } else {
      throw Error(ErrorCode::kBadParameter,
                  "unknown symmetry '" + opt_.symmetry + "' (auto|off)");
    }
    emit(oracle_to_json(inst, bound, oracle_search(inst, bound, mode, options)));
    return kExitOk;
  }

  int dynamics() {
    const Instance inst = parse_instance(read_file(opt_.instance));
    const Assignment start = parse_assignment(read_file(opt_.assignment), inst);
    SwapPolicy policy = SwapPolicy::first();
    if (opt_.policy.rfind("random:", 0) == 0) {
      policy = SwapPolicy::random(parse_number<std::uint64_t>(
          std::string_view(opt_.policy).substr(7), "seed"));
    } else if (opt_.policy != "first") {
      throw Error(ErrorCode::kBadParameter,
                  "unknown policy '" + opt_.policy + "' (first|random:SEED)");
    }
    emit(trace_to_json(inst, run_dynamics(inst, start, policy, opt_.max_steps)));
    return kExitOk;
  }

  int gen() {
    const std::vector<std::string> head = split(opt_.family, ':');
    const std::string& name = head[0];
    const std::string args = head.size() > 1 ? opt_.family.substr(name.size() + 1)
                                             : std::string();
    const auto no_args = [&] {
      if (head.size() != 1) {
        throw Error(ErrorCode::kBadParameter,
                    "family '" + name + "' takes no parameters");
      }
    };
    std::optional<Bundle> bundle;
    std::optional<Instance> inst;
    if (name == "ktt") {
      if (head.size() != 2) {
        throw Error(ErrorCode::kBadParameter, "usage: ktt:T");
      }
      inst = gen_ktt(parse_number<std::size_t>(args, "t"));
    } else if (name == "two-triangles") {
      no_args();
      inst = gen_two_triangles();
    } else if (name == "prop1") {
      no_args();
      bundle = gen_prop1();
    } else if (name == "example1") {
      no_args();
      bundle = gen_example1();
    } else if (name == "random") {
      const std::vector<std::string> parts = split(args, ',');
      if (head.size() != 2 || parts.size() < 3 || parts.size() > 4) {
        throw Error(ErrorCode::kBadParameter, "usage: random:N,P,SEED[,SHAPE]");
      }
      const RandomShape shape = parts.size() == 4
                                    ? parse_random_shape(parts[3])
                                    : RandomShape::kCycle;
      inst = gen_random(parse_number<std::size_t>(parts[0], "n"),
                        parse_probability(parts[1]),
                        shape, parse_number<std::uint64_t>(parts[2], "seed"));
    } else {
      throw Error(ErrorCode::kBadParameter,
                  "unknown family '" + name +
                      "' (ktt:T|two-triangles|prop1|example1|random:N,P,SEED[,SHAPE])");
    }
    // Bundled families carry their start assignment in the same document, so
    // the output works both as --instance and as --assignment.
    Json doc = instance_to_json(bundle ? bundle->instance : *inst);
    if (bundle) {
      doc["assignment"] = assignment_map(bundle->instance, bundle->assignment);
    }
    emit(doc);
    return kExitOk;
  }

  int dot() {
    const Instance inst = parse_instance(read_file(opt_.instance));
    std::optional<Assignment> asg;
    if (!opt_.assignment.empty()) {
      asg = parse_assignment(read_file(opt_.assignment), inst);
    }
    const std::string prefs = preferences_to_dot(inst, asg);
    const std::string seats = seats_to_dot(inst, asg);
    if (opt_.raw) {
      out_ << prefs << seats;
      return kExitOk;
    }
    Json doc;
    doc["preferences"] = prefs;
    doc["seats"] = seats;
    emit(doc);
    return kExitOk;
  }

  void emit(const Json& doc) {
    out_ << doc.dump(opt_.pretty ? 2 : -1) << "\n";
  }

 private:
  const Options& opt_;
  std::ostream& out_;
};

void emit_error(std::ostream& out, std::ostream& err, bool pretty,
                std::string_view code, const std::string& message) {
  Json doc;
  doc["error"]["code"] = code;
  doc["error"]["message"] = message;
  out << doc.dump(pretty ? 2 : -1) << "\n";
  err << "error: " << code << ": " << message << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Options opt;
  CLI::App app{"Neighborhood-stable seat assignments", "seatstab"};
  app.fallthrough();
  app.require_subcommand(0, 1);
  app.add_flag("--pretty", opt.pretty, "Indent JSON output");
  app.add_flag("--version", opt.version, "Print the version and exit");

  CLI::App* solve = app.add_subcommand("solve", "Compute a stable assignment");
  solve->add_option("instance,--instance", opt.instance, "Instance JSON file");
  solve->add_option("--method", opt.method, "auto|cycle|path|general");
  solve->add_option("--seed", opt.seed, "First agent for --method path");
  solve->add_option("--dfvs", opt.dfvs,
                    "Comma-separated feedback vertex set for --method general");
  solve->add_option("--dfvs-budget", opt.dfvs_budget,
                    "Largest n for the exact feedback vertex set search");

  CLI::App* check_app = app.add_subcommand("check", "Verify an assignment");
  check_app->add_option("instance,--instance", opt.instance, "Instance JSON file");
  check_app->add_option("--assignment", opt.assignment, "Assignment JSON file")
      ->required();
  check_app->add_option("--distance", opt.distance, "1|2|...|unbounded");

  CLI::App* oracle = app.add_subcommand("oracle", "Exhaustive search");
  oracle->add_option("instance,--instance", opt.instance, "Instance JSON file");
  oracle->add_option("--distance", opt.distance, "1|2|...|unbounded");
  oracle->add_option("--mode", opt.mode, "exists|count|enumerate");
  oracle->add_option("--limit", opt.limit, "Largest n to search");
  oracle->add_option("--symmetry", opt.symmetry, "auto|off");

  CLI::App* dyn = app.add_subcommand("dynamics", "Run swap dynamics");
  dyn->add_option("instance,--instance", opt.instance, "Instance JSON file");
  dyn->add_option("--assignment", opt.assignment, "Start assignment JSON file")
      ->required();
  dyn->add_option("--policy", opt.policy, "first|random:SEED");
  dyn->add_option("--max-steps", opt.max_steps, "Swap cap (default 64 n^2)");

  CLI::App* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--family", opt.family,
                  "ktt:T|two-triangles|prop1|example1|random:N,P,SEED[,SHAPE]")
      ->required();

  CLI::App* dot = app.add_subcommand("dot", "Graphviz renderings");
  dot->add_option("instance,--instance", opt.instance, "Instance JSON file");
  dot->add_option("--assignment", opt.assignment, "Assignment JSON file");
  dot->add_flag("--raw", opt.raw, "Print DOT text instead of JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    emit_error(out, err, opt.pretty, error_name(ErrorCode::kBadParameter),
               e.what());
    return kExitInput;
  }

  Runner runner(opt, out);
  try {
    if (opt.version) {
      Json doc;
      doc["version"] = kVersion;
      runner.emit(doc);
      return kExitOk;
    }
    if (solve->parsed()) return runner.solve();
    if (check_app->parsed()) return runner.check_cmd();
    if (oracle->parsed()) return runner.oracle();
    if (dyn->parsed()) return runner.dynamics();
    if (gen->parsed()) return runner.gen();
    if (dot->parsed()) return runner.dot();
    throw Error(ErrorCode::kBadParameter,
                "expected a subcommand: solve|check|oracle|dynamics|gen|dot");
  } catch (const Error& e) {
    emit_error(out, err, opt.pretty, error_name(e.code()), e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    emit_error(out, err, opt.pretty, error_name(ErrorCode::kInternal), e.what());
    return kExitInternal;
  }
}

}  // namespace seatstab
