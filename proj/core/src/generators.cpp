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

#include "ef1/generators.hpp"

#include <string>

#include "ef1/error.hpp"

namespace ef1 {
namespace {

int exact_sqrt(int n) {
  int r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

Instance from_ints(const std::vector<std::vector<std::int64_t>>& rows) {
  ValueMatrix raw;
  for (const auto& r : rows) raw.emplace_back(r.begin(), r.end());
  return validate_instance(raw);
}

int ipow3(int e) {
  int out = 1;
  while (e-- > 0) out *= 3;
  return out;
}

}  // namespace

Instance gen_sqrt_n_instance(int n, const Rational& b) {
  const int root = exact_sqrt(n);
  if (n < 4 || root * root != n) {
    throw Error(ErrorCode::kNotPerfectSquare,
                "n = " + std::to_string(n) + " is not a perfect square >= 4");
  }
  if (b.sign() <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "b must be positive");
  }
  const Rational a = b * Rational(root);
  ValueMatrix raw(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int k = 0; k < root; ++k) {
    for (int g = k * root; g < (k + 1) * root; ++g) {
      raw[static_cast<std::size_t>(k)][static_cast<std::size_t>(g)] = a;
    }
  }
  for (int i = root; i < n; ++i) {
    for (auto& v : raw[static_cast<std::size_t>(i)]) v = b;
  }
  return validate_instance(raw);
}

Instance gen_two_agent_tight() {
  const Rational h(3, 2);
  return validate_instance({{h, h, h, 0}, {1, 1, 1, h}});
}

Instance gen_three_agent_tight() {
  return from_ints({{2, 2, 2, 0, 0, 0}, {0, 0, 0, 2, 2, 2}, {1, 1, 1, 1, 1, 1}});
}

Instance gen_intro_example() { return from_ints({{50, 50, 0}, {49, 26, 25}}); }

void validate_params(const EnumerationParams& params) {
  if (params.agents != 2 && params.agents != 3) {
    throw Error(ErrorCode::kInvalidArgument, "enumeration supports 2 or 3 agents");
  }
  if (params.max_items < 2 || params.max_items > 8) {
    throw Error(ErrorCode::kInvalidArgument, "max items must lie in [2, 8]");
  }
  for (const LevelPair& lp : params.levels) {
    if (!(lp.a > lp.b && lp.b >= 1)) {
      throw Error(ErrorCode::kInvalidArgument, "level pair " + std::to_string(lp.a) + ":" +
                                                   std::to_string(lp.b) +
                                                   " violates a > b >= 1");
    }
  }
}

TernaryEnumerator::TernaryEnumerator(EnumerationParams params) : params_(std::move(params)) {
  validate_params(params_);
  column_kinds_ = ipow3(params_.agents);
  done_ = params_.levels.empty();
  if (!done_) start_block();
}

bool TernaryEnumerator::start_block() {
  columns_.assign(static_cast<std::size_t>(items_), 1);
  fresh_ = true;
  return true;
}

// Steps to the next non-decreasing code sequence, rolling over into the next
// item count and then the next level pair.
bool TernaryEnumerator::advance() {
  if (fresh_) {
    fresh_ = false;
    return true;
  }
  const int top = column_kinds_ - 1;
  for (int pos = items_ - 1; pos >= 0; --pos) {
    if (columns_[static_cast<std::size_t>(pos)] < top) {
      const int v = columns_[static_cast<std::size_t>(pos)] + 1;
      for (int k = pos; k < items_; ++k) columns_[static_cast<std::size_t>(k)] = v;
      return true;
    }
  }
  if (items_ < params_.max_items) {
    ++items_;
  } else {
    ++level_index_;
    items_ = 2;
    if (level_index_ >= params_.levels.size()) {
      done_ = true;
      return false;
    }
  }
  start_block();
  fresh_ = false;
  return true;
}

std::optional<Instance> TernaryEnumerator::next() {
  const int n = params_.agents;
  while (!done_ && advance()) {
    const LevelPair& lp = params_.levels[level_index_];
    const std::int64_t level_value[3] = {0, lp.b, lp.a};

    std::vector<std::int64_t> sums(static_cast<std::size_t>(n), 0);
    bool has_a = false;
    bool has_b = false;
    std::vector<std::vector<Rational>> raw(static_cast<std::size_t>(n));
    for (int code : columns_) {
      int rest = code;
      for (int i = n - 1; i >= 0; --i) {
        const std::int64_t v = level_value[rest % 3];
        rest /= 3;
        sums[static_cast<std::size_t>(i)] += v;
        has_a = has_a || v == lp.a;
        has_b = has_b || v == lp.b;
        raw[static_cast<std::size_t>(i)].emplace_back(v);
      }
    }
    if (!has_a || !has_b) continue;
    if (params_.require_normalized) {
      bool equal = true;
      for (int i = 1; i < n; ++i) equal = equal && sums[static_cast<std::size_t>(i)] == sums[0];
      if (!equal) continue;
    }
    yielded_level_ = level_index_;
    return validate_instance(raw);
  }
  return std::nullopt;
}

const LevelPair& TernaryEnumerator::current_levels() const {
  return params_.levels[yielded_level_];
}

std::vector<EnumeratedInstance> enumerate_ternary_instances(const EnumerationParams& params) {
  TernaryEnumerator it(params);
  std::vector<EnumeratedInstance> out;
  while (auto inst = it.next()) out.push_back({std::move(*inst), it.current_levels()});
  return out;
}

}  // namespace ef1
