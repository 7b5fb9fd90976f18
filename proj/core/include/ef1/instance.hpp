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

#ifndef EF1_INSTANCE_HPP_
#define EF1_INSTANCE_HPP_

#include <span>
#include <vector>

#include "ef1/rational.hpp"

namespace ef1 {

using ValueMatrix = std::vector<std::vector<Rational>>;

// n agents by m items of additive values, row-major by agent. Construct
// through validate_instance(); a live Instance always satisfies: n >= 2,
// m >= 2, every entry >= 0, and every item valued positively by some agent.
class Instance {
 public:
  int agents() const noexcept { return agents_; }
  int items() const noexcept { return items_; }

  const Rational& value(int agent, int item) const {
    return values_[static_cast<std::size_t>(agent) * items_ + item];
  }
  std::span<const Rational> row(int agent) const {
    return {values_.data() + static_cast<std::size_t>(agent) * items_,
            static_cast<std::size_t>(items_)};
  }
  ValueMatrix matrix() const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  friend Instance validate_instance(const ValueMatrix& raw);

  Instance(int agents, int items, std::vector<Rational> values)
      : agents_(agents), items_(items), values_(std::move(values)) {}

  int agents_ = 0;
  int items_ = 0;
  std::vector<Rational> values_;
};

// The two positive levels of a ternary instance, a > b > 0.
struct TernaryProfile {
  Rational a;
  Rational b;

  friend bool operator==(const TernaryProfile&, const TernaryProfile&) = default;
};

// Throws kBadShape, kNegativeValue or kWorthlessItem (lowest offending index).
Instance validate_instance(const ValueMatrix& raw);

// True iff every agent has the same total value for the full item set.
bool is_normalized(const Instance& inst);

// Succeeds iff the set of distinct positive entries has exactly two elements;
// otherwise throws kNotTernary carrying the observed count.
TernaryProfile classify_ternary(const Instance& inst);

// Number of distinct positive values in the matrix.
int distinct_positive_levels(const Instance& inst);

// Exact additive value of `items` for `agent`. Items must be distinct.
Rational bundle_value(const Instance& inst, int agent, std::span<const int> items);

// Every entry multiplied by `factor` (> 0).
Instance scale(const Instance& inst, const Rational& factor);

// Smallest positive factor c such that c * inst is an integer matrix. For a
// normalized instance this makes the common row sum the least one for which
// every entry is integral.
Rational canonical_scale_factor(const Instance& inst);
Instance canonical_integer_form(const Instance& inst);

// Item g of the result is item perm[g] of `inst`.
Instance permute_items(const Instance& inst, std::span<const int> perm);

// Columns sorted ascending by their value vectors (agent 0 first).
Instance sort_item_columns(const Instance& inst);

}  // namespace ef1

#endif  // EF1_INSTANCE_HPP_
