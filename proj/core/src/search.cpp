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

#include "ef1/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "ef1/error.hpp"
#include "ef1/fairness.hpp"

namespace ef1 {

SearchRow evaluate_instance(std::size_t id, const Instance& inst, const LevelPair& levels,
                            const std::vector<AlgorithmKind>& algorithms,
                            const OracleOptions& options) {
  SearchRow row{id, inst, levels, price_of_ef1(inst, options), {}, {}, true, true, true};
  const Rational& opt = row.price.opt;
  const Rational& ef1_opt = row.price.ef1_opt;
  row.sandwich_holds = ef1_opt <= opt;

  const AlgorithmResult rr = run_algorithm(inst, AlgorithmKind::kRoundRobin);
  row.round_robin_ef1 = is_ef1(inst, rr.allocation).holds;
  row.sandwich_holds = row.sandwich_holds && rr.welfare <= ef1_opt;

  for (AlgorithmKind kind : algorithms) {
    if (!algorithm_applicable(inst, kind)) continue;
    const AlgorithmResult run =
        kind == AlgorithmKind::kRoundRobin ? rr : run_algorithm(inst, kind);
    row.algorithm_welfare[kind] = run.welfare;
    row.algorithm_ratio[kind] = opt / run.welfare;
    row.algorithms_ef1 = row.algorithms_ef1 && is_ef1(inst, run.allocation).holds;
    row.sandwich_holds = row.sandwich_holds && run.welfare <= ef1_opt;
  }
  return row;
}

std::string format_csv_row(const SearchRow& row) {
  std::ostringstream out;
  out << row.id << ',' << row.instance.agents() << ',' << row.instance.items() << ','
      << row.levels.a << ',' << row.levels.b << ',' << row.price.opt.to_string() << ','
      << row.price.ef1_opt.to_string() << ',' << row.price.price.num() << ','
      << row.price.price.den() << ',' << row.price.price.to_decimal(6);
  for (AlgorithmKind kind : {AlgorithmKind::kM2rr, AlgorithmKind::kRmm}) {
    const auto sw = row.algorithm_welfare.find(kind);
    if (sw == row.algorithm_welfare.end()) {
      out << ",,";
    } else {
      out << ',' << sw->second.to_string() << ',' << row.algorithm_ratio.at(kind).to_string();
    }
  }
  return out.str();
}

SearchReport worst_case_search(const EnumerationParams& params,
                               const std::vector<AlgorithmKind>& algorithms,
                               const SearchOptions& options) {
  const std::vector<EnumeratedInstance> stream = enumerate_ternary_instances(params);

  std::ofstream file;
  std::ostream* csv = options.csv_stream;
  if (!options.csv_path.empty()) {
    file.open(options.csv_path, std::ios::out | std::ios::trunc | std::ios::binary);
    if (!file) {
      throw Error(ErrorCode::kInvalidArgument, "cannot open " + options.csv_path);
    }
    csv = &file;
  }

  std::vector<std::optional<SearchRow>> rows(stream.size());
  std::vector<std::exception_ptr> failures(stream.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t k = cursor++; k < stream.size(); k = cursor++) {
      try {
        rows[k] = evaluate_instance(k, stream[k].instance, stream[k].levels, algorithms,
                                    options.oracle);
      } catch (...) {
        failures[k] = std::current_exception();
      }
    }
  };
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  SearchReport report;
  report.params = params;
  report.csv_path = options.csv_path;
  if (csv != nullptr) *csv << kSearchCsvHeader << '\n';

  bool first = true;
  for (std::size_t k = 0; k < stream.size(); ++k) {
    if (failures[k]) {
      if (csv != nullptr) {
        std::string what = "unknown error";
        try {
          std::rethrow_exception(failures[k]);
        } catch (const std::exception& e) {
          what = e.what();
        }
        *csv << "# error," << k << ',' << what << '\n';
        csv->flush();
      }
      std::rethrow_exception(failures[k]);
    }
    const SearchRow& row = *rows[k];
    if (csv != nullptr) *csv << format_csv_row(row) << '\n';

    ++report.instances_checked;
    if (first || row.price.price > report.worst_price) {
      report.worst_price = row.price.price;
      report.worst_instance_id = k;
      report.worst_instance = row.instance;
    }
    if (first || row.price.price < report.best_price) report.best_price = row.price.price;
    first = false;

    for (const auto& [kind, ratio] : row.algorithm_ratio) {
      auto it = report.algorithm_worst.find(kind);
      if (it == report.algorithm_worst.end()) {
        report.algorithm_worst.emplace(kind, AlgorithmWorst{ratio, k, row.instance});
      } else if (ratio > it->second.ratio) {
        it->second = AlgorithmWorst{ratio, k, row.instance};
      }
    }
    report.algorithm_ef1_failures += row.algorithms_ef1 ? 0 : 1;
    report.sandwich_violations += row.sandwich_holds ? 0 : 1;
    report.round_robin_ef1_failures += row.round_robin_ef1 ? 0 : 1;
  }
  if (csv != nullptr) csv->flush();
  return report;
}

}  // namespace ef1
