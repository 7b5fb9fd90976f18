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

#ifndef EF1_GENERATORS_HPP_
#define EF1_GENERATORS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "ef1/instance.hpp"
#include "ef1/rational.hpp"

namespace ef1 {

// n agents and n items, n a perfect square >= 4. sqrt(n) specialists (listed
// first) each value their own block of sqrt(n) consecutive items at
// a = b * sqrt(n) and everything else at 0; the other agents value every item
// at b. Throws kNotPerfectSquare.
Instance gen_sqrt_n_instance(int n, const Rational& b);

// Rows (3/2, 3/2, 3/2, 0) and (1, 1, 1, 3/2).
Instance gen_two_agent_tight();

// Rows (2,2,2,0,0,0), (0,0,0,2,2,2), (1,1,1,1,1,1).
Instance gen_three_agent_tight();

// Rows (50, 50, 0) and (49, 26, 25); four distinct positive values, so only
// the oracles and fairness predicates apply to it.
Instance gen_intro_example();

struct LevelPair {
  std::int64_t a = 2;
  std::int64_t b = 1;
  friend bool operator==(const LevelPair&, const LevelPair&) = default;
};

struct EnumerationParams {
  int agents = 2;
  int max_items = 4;
  std::vector<LevelPair> levels;
  bool require_normalized = true;
};

// Throws kInvalidArgument unless agents is 2 or 3, 2 <= max_items <= 8, and
// every level pair has a > b >= 1.
void validate_params(const EnumerationParams& params);

// Streams every valuation matrix with entries in {a, b, 0} whose item columns
// are sorted ascending by value vector, for each level pair in order and
// m = 2..max_items ascending. With require_normalized only equal-row-sum
// matrices are yielded. Matrices with an all-zero column, or using only one of
// the two positive levels, never appear. The order is deterministic.
class TernaryEnumerator {
 public:
  explicit TernaryEnumerator(EnumerationParams params);

  std::optional<Instance> next();

  // Level pair of the instance most recently returned by next().
  const LevelPair& current_levels() const;

 private:
  bool advance();
  bool start_block();

  EnumerationParams params_;
  std::size_t level_index_ = 0;
  int items_ = 2;
  int column_kinds_ = 0;
  std::vector<int> columns_;  // non-decreasing column codes in [1, column_kinds_)
  bool fresh_ = true;
  bool done_ = false;
  std::size_t yielded_level_ = 0;
};

struct EnumeratedInstance {
  Instance instance;
  LevelPair levels;
};

std::vector<EnumeratedInstance> enumerate_ternary_instances(const EnumerationParams& params);

}  // namespace ef1

#endif  // EF1_GENERATORS_HPP_
