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

#ifndef EF1_SEARCH_HPP_
#define EF1_SEARCH_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ef1/algorithms.hpp"
#include "ef1/generators.hpp"
#include "ef1/instance.hpp"
#include "ef1/oracle.hpp"
#include "ef1/rational.hpp"

namespace ef1 {

inline constexpr const char* kSearchCsvHeader =
    "instance_id,n,m,a,b,opt,ef1_opt,price_num,price_den,price_dec,"
    "m2rr_sw,m2rr_ratio,rmm_sw,rmm_ratio";

struct SearchOptions {
  int jobs = 1;
  OracleOptions oracle;
  // When non-empty the CSV is written to this file.
  std::string csv_path;
  // Otherwise, when set, the CSV goes to this stream.
  std::ostream* csv_stream = nullptr;
};

// One evaluated instance of a sweep.
struct SearchRow {
  std::size_t id = 0;
  Instance instance;
  LevelPair levels;
  PriceReport price;
  std::map<AlgorithmKind, Rational> algorithm_welfare;
  std::map<AlgorithmKind, Rational> algorithm_ratio;
  bool algorithms_ef1 = true;   // every requested algorithm output passed is_ef1
  bool sandwich_holds = true;   // SW(alg) <= ef1_opt <= opt for every algorithm run
  bool round_robin_ef1 = true;  // the round-robin output is EF1
};

struct AlgorithmWorst {
  Rational ratio{1};
  std::size_t instance_id = 0;
  std::optional<Instance> instance;
};

struct SearchReport {
  EnumerationParams params;
  std::size_t instances_checked = 0;
  Rational worst_price{1};
  std::size_t worst_instance_id = 0;
  std::optional<Instance> worst_instance;
  Rational best_price{1};
  std::map<AlgorithmKind, AlgorithmWorst> algorithm_worst;
  std::string csv_path;
  std::size_t algorithm_ef1_failures = 0;
  std::size_t sandwich_violations = 0;
  std::size_t round_robin_ef1_failures = 0;
};

// Evaluates one instance: the price of EF1 and, for each of `algorithms`
// applicable to it, welfare and ratio. Round-Robin is always run for the
// oracle sandwich check but is only reported when requested.
SearchRow evaluate_instance(std::size_t id, const Instance& inst, const LevelPair& levels,
                            const std::vector<AlgorithmKind>& algorithms,
                            const OracleOptions& options);

std::string format_csv_row(const SearchRow& row);

// Folds evaluate_instance over enumerate_ternary_instances(params) on
// `options.jobs` workers. Rows are written and reduced in stream order, so the
// CSV and every reported maximum (first occurrence wins) are independent of
// the worker count. On kBudgetExceeded the rows preceding the failing instance
// are flushed, followed by a "# error," record, and the error is rethrown.
SearchReport worst_case_search(const EnumerationParams& params,
                               const std::vector<AlgorithmKind>& algorithms,
                               const SearchOptions& options = {});

}  // namespace ef1

#endif  // EF1_SEARCH_HPP_
