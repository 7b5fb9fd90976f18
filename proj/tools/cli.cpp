// Copyright 2026 The Authors.
//
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

#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#ifdef EF1_CLI11_PACKAGE
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include "ef1/algorithms.hpp"
#include "ef1/error.hpp"
#include "ef1/fairness.hpp"
#include "ef1/generators.hpp"
#include "ef1/io.hpp"
#include "ef1/oracle.hpp"
#include "ef1/search.hpp"

namespace ef1::cli {
namespace {

using io::json;

OracleOptions oracle_options() {
  OracleOptions options;
  if (const char* env = std::getenv("EF1_BUDGET"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
      options.budget = v;
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("EF1_BUDGET must be a non-negative integer, got '") + env + "'");
    }
  }
  return options;
}

Instance load_instance(const std::string& path) {
  return io::instance_from_json(io::read_json_file(path));
}

Allocation load_allocation(const std::string& path, const Instance& inst) {
  Allocation alloc = io::allocation_from_json(io::read_json_file(path), inst.items());
  if (alloc.agents() != inst.agents()) {
    throw Error(ErrorCode::kShapeMismatch, "allocation has " + std::to_string(alloc.agents()) +
                                               " bundles, instance has " +
                                               std::to_string(inst.agents()) + " agents");
  }
  return alloc;
}

std::vector<LevelPair> parse_levels(const std::string& text) {
  std::vector<LevelPair> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorCode::kInvalidArgument, "level pair '" + item + "' is not of the form a:b");
    }
    const Rational a = Rational::parse(item.substr(0, colon));
    const Rational b = Rational::parse(item.substr(colon + 1));
    if (!a.is_integer() || !b.is_integer()) {
      throw Error(ErrorCode::kInvalidArgument, "level pair '" + item + "' must be integral");
    }
    out.push_back({a.num(), b.num()});
  }
  if (out.empty()) throw Error(ErrorCode::kInvalidArgument, "no level pairs given");
  return out;
}

int cmd_check(const std::string& instance_file, const std::string& allocation_file,
              std::ostream& out) {
  const Instance inst = load_instance(instance_file);
  const Allocation alloc = load_allocation(allocation_file, inst);
  const Ef1Report report = is_ef1(inst, alloc);
  json doc = io::ef1_report_to_json(report);
  doc["social_welfare"] = social_welfare(inst, alloc).to_string();
  doc["envy_free"] = is_envy_free(inst, alloc);
  doc["complete"] = alloc.complete();
  out << doc.dump(2) << '\n';
  return report.holds ? kExitOk : kExitPredicateFalse;
}

int cmd_solve(const std::string& instance_file, const std::string& alg, bool with_trace,
              const std::string& trace_out, std::ostream& out) {
  const Instance inst = load_instance(instance_file);
  const WelfareResult opt = optimal_social_welfare(inst);

  std::optional<AlgorithmTrace> trace;
  Allocation allocation;
  Rational welfare;
  if (alg == "opt-sw") {
    allocation = opt.allocation;
    welfare = opt.welfare;
  } else if (alg == "opt-ef1") {
    WelfareResult best = max_ef1_welfare(inst, oracle_options());
    allocation = std::move(best.allocation);
    welfare = best.welfare;
  } else if (const auto kind = parse_algorithm(alg)) {
    AlgorithmResult run = run_algorithm(inst, *kind);
    allocation = std::move(run.allocation);
    welfare = run.welfare;
    trace = std::move(run.trace);
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown algorithm '" + alg + "'");
  }

  json doc = io::allocation_to_json(allocation);
  const Rational ratio = opt.welfare / welfare;
  doc["footer"] = {{"algorithm", alg},
                   {"social_welfare", welfare.to_string()},
                   {"optimal_social_welfare", opt.welfare.to_string()},
                   {"ratio", ratio.to_string()},
                   {"ratio_decimal", ratio.to_decimal(6)},
                   {"ef1", is_ef1(inst, allocation).holds}};
  if (trace && with_trace) doc["trace"] = io::trace_to_json(*trace);
  if (trace && !trace_out.empty()) io::write_text_file(trace_out, io::trace_to_json(*trace).dump(2) + "\n");
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_price(const std::string& instance_file, std::ostream& out) {
  const Instance inst = load_instance(instance_file);
  out << io::price_report_to_json(price_of_ef1(inst, oracle_options())).dump(2) << '\n';
  return kExitOk;
}

int cmd_gen(const std::string& family, int n, const std::string& b_text, const std::string& out_file,
            std::ostream& out, std::ostream& err) {
  Instance inst = [&] {
    if (family == "sqrt-n") return gen_sqrt_n_instance(n, Rational::parse(b_text));
    if (family == "two-tight") return gen_two_agent_tight();
    if (family == "three-tight") return gen_three_agent_tight();
    if (family == "intro") return gen_intro_example();
    throw Error(ErrorCode::kInvalidArgument, "unknown family '" + family + "'");
  }();

  json summary = {{"family", family},
                  {"agents", inst.agents()},
                  {"items", inst.items()},
                  {"normalized", is_normalized(inst)}};
  if (distinct_positive_levels(inst) == 2) {
    const TernaryProfile levels = classify_ternary(inst);
    summary["ternary"] = {{"a", levels.a.to_string()}, {"b", levels.b.to_string()}};
  } else {
    summary["ternary"] = nullptr;
  }

  const std::string text = io::instance_to_json(inst).dump(2) + "\n";
  if (out_file.empty()) {
    out << text;
    err << summary.dump() << '\n';
  } else {
    io::write_text_file(out_file, text);
    summary["out"] = out_file;
    out << summary.dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_search(int n, int m_max, const std::string& levels, const std::string& out_file, int jobs,
               const std::vector<std::string>& alg_names, bool include_unnormalized,
               std::ostream& out) {
  EnumerationParams params{n, m_max, parse_levels(levels), !include_unnormalized};
  validate_params(params);

  std::vector<AlgorithmKind> algorithms;
  if (alg_names.empty()) {
    algorithms.push_back(n == 2 ? AlgorithmKind::kM2rr : AlgorithmKind::kRmm);
  }
  for (const std::string& name : alg_names) {
    if (name == "none") continue;
    const auto kind = parse_algorithm(name);
    if (!kind) throw Error(ErrorCode::kInvalidArgument, "unknown algorithm '" + name + "'");
    algorithms.push_back(*kind);
  }

  SearchOptions options;
  options.jobs = jobs;
  options.oracle = oracle_options();
  options.csv_path = out_file;
  const SearchReport report = worst_case_search(params, algorithms, options);
  out << io::search_summary_to_json(report).dump(2) << '\n';
  return kExitOk;
}

int cmd_trace_replay(const std::string& trace_file, const std::string& instance_file,
                     std::ostream& out) {
  const Instance inst = load_instance(instance_file);
  const AlgorithmTrace trace = io::trace_from_json(io::read_json_file(trace_file));
  out << io::allocation_to_json(replay_trace(trace, inst.agents(), inst.items())).dump() << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact fair division toolkit for EF1 allocations under ternary valuations", "ef1"};
  app.require_subcommand(1);

  std::string instance_file, allocation_file, trace_file, out_file, trace_out;
  std::string alg = "m2rr", family, b_text = "1", levels;
  std::vector<std::string> alg_names;
  bool with_trace = false, include_unnormalized = false;
  int n = 0, m_max = 0, jobs = 1;

  auto* check = app.add_subcommand("check", "EF1 report and welfare of an allocation");
  check->add_option("instance", instance_file, "Instance JSON")->required();
  check->add_option("allocation", allocation_file, "Allocation JSON")->required();

  auto* solve = app.add_subcommand("solve", "Run an algorithm or oracle on an instance");
  solve->add_option("instance", instance_file, "Instance JSON")->required();
  solve->add_option("--alg", alg, "m2rr | rmm | round-robin | opt-ef1 | opt-sw")
      ->check(CLI::IsMember({"m2rr", "rmm", "round-robin", "opt-ef1", "opt-sw"}));
  solve->add_flag("--trace", with_trace, "Include the algorithm trace in the output");
  solve->add_option("--trace-out", trace_out, "Also write the trace to this file");

  auto* price = app.add_subcommand("price", "Exact price of EF1 by brute force");
  price->add_option("instance", instance_file, "Instance JSON")->required();

  auto* gen = app.add_subcommand("gen", "Write a lower-bound family instance");
  gen->add_option("--family", family, "sqrt-n | two-tight | three-tight | intro")
      ->required()
      ->check(CLI::IsMember({"sqrt-n", "two-tight", "three-tight", "intro"}));
  gen->add_option("--n", n, "Agent count (sqrt-n family; a perfect square >= 4)");
  gen->add_option("--b", b_text, "Low value level b as p/q (sqrt-n family)");
  gen->add_option("--out", out_file, "Output file (stdout when omitted)");

  auto* search = app.add_subcommand("search", "Exhaustive worst-case sweep over ternary instances");
  search->add_option("--n", n, "Agents (2 or 3)")->required();
  search->add_option("--m-max", m_max, "Largest item count (<= 8)")->required();
  search->add_option("--levels", levels, "Comma-separated a:b integer level pairs")->required();
  search->add_option("--out", out_file, "CSV report path");
  search->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  search->add_option("--algs", alg_names, "Algorithms to score (default: m2rr for n=2, rmm for n=3; 'none' for none)")
      ->delimiter(',');
  search->add_flag("--include-unnormalized", include_unnormalized,
                   "Do not filter out instances with unequal row sums");

  auto* replay = app.add_subcommand("trace-replay", "Rebuild an allocation from a trace");
  replay->add_option("trace", trace_file, "Trace JSON")->required();
  replay->add_option("instance", instance_file, "Instance JSON")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (check->parsed()) return cmd_check(instance_file, allocation_file, out);
    if (solve->parsed()) return cmd_solve(instance_file, alg, with_trace, trace_out, out);
    if (price->parsed()) return cmd_price(instance_file, out);
    if (gen->parsed()) return cmd_gen(family, n, b_text, out_file, out, err);
    if (search->parsed()) {
      return cmd_search(n, m_max, levels, out_file, jobs, alg_names, include_unnormalized, out);
    }
    if (replay->parsed()) return cmd_trace_replay(trace_file, instance_file, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kBudgetExceeded ? kExitBudget : kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace ef1::cli
