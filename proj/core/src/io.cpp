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

#include "ef1/io.hpp"

#include <fstream>
#include <sstream>

#include "ef1/error.hpp"

namespace ef1::io {
namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::kParseError, what); }

Rational rational_from_json(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  fail("value must be a \"p/q\" string or an integer, got " + v.dump());
}

int int_field(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_number_integer()) {
    fail(std::string("missing integer field \"") + key + "\"");
  }
  return doc.at(key).get<int>();
}

std::vector<int> index_list(const json& v, const char* what) {
  if (!v.is_array()) fail(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const json& e : v) {
    if (!e.is_number_integer()) fail(std::string(what) + " entries must be integers");
    out.push_back(e.get<int>());
  }
  return out;
}

json allocation_bundles(const Allocation& alloc) {
  json out = json::array();
  for (const Bundle& b : alloc.bundles()) out.push_back(b);
  return out;
}

}  // namespace

Instance instance_from_json(const json& doc) {
  if (!doc.is_object()) fail("instance must be a JSON object");
  const int n = int_field(doc, "agents");
  const int m = int_field(doc, "items");
  if (!doc.contains("values") || !doc.at("values").is_array()) fail("missing \"values\" array");
  const json& rows = doc.at("values");
  if (static_cast<int>(rows.size()) != n) {
    throw Error(ErrorCode::kBadShape, "\"agents\" is " + std::to_string(n) + " but " +
                                          std::to_string(rows.size()) + " rows given");
  }
  ValueMatrix raw;
  for (const json& r : rows) {
    if (!r.is_array()) fail("each row of \"values\" must be an array");
    if (static_cast<int>(r.size()) != m) {
      throw Error(ErrorCode::kBadShape, "\"items\" is " + std::to_string(m) +
                                            " but a row has " + std::to_string(r.size()));
    }
    std::vector<Rational> row;
    for (const json& v : r) row.push_back(rational_from_json(v));
    raw.push_back(std::move(row));
  }
  return validate_instance(raw);
}

json instance_to_json(const Instance& inst) {
  json values = json::array();
  for (int i = 0; i < inst.agents(); ++i) {
    json row = json::array();
    for (const Rational& v : inst.row(i)) row.push_back(v.to_fraction_string());
    values.push_back(std::move(row));
  }
  return {{"agents", inst.agents()}, {"items", inst.items()}, {"values", std::move(values)}};
}

Allocation allocation_from_json(const json& doc, int items) {
  if (!doc.is_object() || !doc.contains("bundles")) fail("allocation needs a \"bundles\" array");
  const json& bundles = doc.at("bundles");
  if (!bundles.is_array()) fail("\"bundles\" must be an array");
  std::vector<Bundle> out;
  for (const json& b : bundles) out.push_back(index_list(b, "bundle"));
  return Allocation(std::move(out), items);
}

json allocation_to_json(const Allocation& alloc) { return {{"bundles", allocation_bundles(alloc)}}; }

AlgorithmTrace trace_from_json(const json& doc) {
  const json* rounds = &doc;
  if (doc.is_object()) {
    if (!doc.contains("trace")) fail("trace object needs a \"trace\" array");
    rounds = &doc.at("trace");
  }
  if (!rounds->is_array()) fail("trace must be an array of rounds");
  AlgorithmTrace trace;
  for (const json& r : *rounds) {
    if (!r.is_object() || !r.contains("events") || !r.at("events").is_array()) {
      fail("each round needs an \"events\" array");
    }
    TraceRound round{int_field(r, "round"), {}};
    for (const json& e : r.at("events")) {
      if (!e.is_object()) fail("trace events must be objects");
      if (e.contains("dump_to")) {
        round.events.emplace_back(
            DumpEvent{int_field(e, "dump_to"),
                      index_list(e.contains("items") ? e.at("items") : json(), "dump items")});
      } else if (e.contains("removed_agent")) {
        round.events.emplace_back(RemoveAgentEvent{int_field(e, "removed_agent")});
      } else {
        round.events.emplace_back(PickEvent{int_field(e, "agent"), int_field(e, "item")});
      }
    }
    trace.rounds.push_back(std::move(round));
  }
  return trace;
}

json trace_to_json(const AlgorithmTrace& trace) {
  json out = json::array();
  for (const TraceRound& r : trace.rounds) {
    json events = json::array();
    for (const TraceEvent& e : r.events) {
      if (const auto* pick = std::get_if<PickEvent>(&e)) {
        events.push_back({{"agent", pick->agent}, {"item", pick->item}});
      } else if (const auto* dump = std::get_if<DumpEvent>(&e)) {
        events.push_back({{"dump_to", dump->to}, {"items", dump->items}});
      } else {
        events.push_back({{"removed_agent", std::get<RemoveAgentEvent>(e).agent}});
      }
    }
    out.push_back({{"round", r.round}, {"events", std::move(events)}});
  }
  return out;
}

json ef1_report_to_json(const Ef1Report& report) {
  json violations = json::array();
  for (const EnvyPair& p : report.violations) violations.push_back({p.envious, p.envied});
  json witnesses = json::array();
  for (const EnvyWitness& w : report.witnesses) {
    witnesses.push_back({{"envious", w.envious},
                         {"envied", w.envied},
                         {"item", w.item ? json(*w.item) : json(nullptr)}});
  }
  return {{"holds", report.holds}, {"violations", violations}, {"witnesses", witnesses}};
}

json price_report_to_json(const PriceReport& report) {
  return {{"opt", report.opt.to_string()},
          {"opt_allocation", allocation_bundles(report.opt_allocation)},
          {"ef1_opt", report.ef1_opt.to_string()},
          {"ef1_opt_allocation", allocation_bundles(report.ef1_opt_allocation)},
          {"price", report.price.to_string()},
          {"price_decimal", report.price.to_decimal(6)}};
}

json search_summary_to_json(const SearchReport& report) {
  json levels = json::array();
  for (const LevelPair& lp : report.params.levels) {
    levels.push_back(std::to_string(lp.a) + ":" + std::to_string(lp.b));
  }
  json algorithms = json::object();
  for (const auto& [kind, worst] : report.algorithm_worst) {
    algorithms[std::string(algorithm_name(kind))] = {
        {"worst_ratio", worst.ratio.to_string()},
        {"worst_ratio_decimal", worst.ratio.to_decimal(6)},
        {"worst_instance_id", worst.instance_id},
        {"worst_instance", worst.instance ? instance_to_json(*worst.instance) : json(nullptr)}};
  }
  return {{"n", report.params.agents},
          {"m_max", report.params.max_items},
          {"levels", levels},
          {"normalized_only", report.params.require_normalized},
          {"instances_checked", report.instances_checked},
          {"worst_price", report.worst_price.to_string()},
          {"worst_price_decimal", report.worst_price.to_decimal(6)},
          {"worst_instance_id", report.worst_instance_id},
          {"worst_instance",
           report.worst_instance ? instance_to_json(*report.worst_instance) : json(nullptr)},
          {"algorithms", algorithms},
          {"algorithm_ef1_failures", report.algorithm_ef1_failures},
          {"sandwich_violations", report.sandwich_violations},
          {"round_robin_ef1_failures", report.round_robin_ef1_failures},
          {"csv", report.csv_path}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    fail(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << text;
}

}  // namespace ef1::io
