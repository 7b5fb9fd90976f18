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

#include "ef1/instance.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "ef1/error.hpp"

namespace ef1 {

ValueMatrix Instance::matrix() const {
  ValueMatrix out(static_cast<std::size_t>(agents_));
  for (int i = 0; i < agents_; ++i) {
    auto r = row(i);
    out[static_cast<std::size_t>(i)].assign(r.begin(), r.end());
  }
  return out;
}

Instance validate_instance(const ValueMatrix& raw) {
  const int n = static_cast<int>(raw.size());
  if (n < 2) {
    throw Error(ErrorCode::kBadShape, "need at least 2 agents, got " + std::to_string(n));
  }
  const int m = static_cast<int>(raw.front().size());
  if (m < 2) {
    throw Error(ErrorCode::kBadShape, "need at least 2 items, got " + std::to_string(m));
  }
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(n) * m);
  for (int i = 0; i < n; ++i) {
    const auto& r = raw[static_cast<std::size_t>(i)];
    if (static_cast<int>(r.size()) != m) {
      throw Error(ErrorCode::kBadShape, "row " + std::to_string(i) + " has " +
                                            std::to_string(r.size()) + " entries, expected " +
                                            std::to_string(m));
    }
    for (int g = 0; g < m; ++g) {
      if (r[static_cast<std::size_t>(g)].sign() < 0) {
        throw Error(ErrorCode::kNegativeValue,
                    "agent " + std::to_string(i) + ", item " + std::to_string(g));
      }
      values.push_back(r[static_cast<std::size_t>(g)]);
    }
  }
  for (int g = 0; g < m; ++g) {
    bool valued = false;
    for (int i = 0; i < n && !valued; ++i) {
      valued = values[static_cast<std::size_t>(i) * m + g].sign() > 0;
    }
    if (!valued) {
      throw Error(ErrorCode::kWorthlessItem, "item " + std::to_string(g));
    }
  }
  return Instance(n, m, std::move(values));
}

bool is_normalized(const Instance& inst) {
  const int m = inst.items();
  std::vector<int> all(static_cast<std::size_t>(m));
  std::iota(all.begin(), all.end(), 0);
  const Rational first = bundle_value(inst, 0, all);
  for (int i = 1; i < inst.agents(); ++i) {
    if (bundle_value(inst, i, all) != first) return false;
  }
  return true;
}

int distinct_positive_levels(const Instance& inst) {
  std::set<Rational> levels;
  for (int i = 0; i < inst.agents(); ++i) {
    for (const Rational& v : inst.row(i)) {
      if (v.sign() > 0) levels.insert(v);
    }
  }
  return static_cast<int>(levels.size());
}

TernaryProfile classify_ternary(const Instance& inst) {
  std::set<Rational> levels;
  for (int i = 0; i < inst.agents(); ++i) {
    for (const Rational& v : inst.row(i)) {
      if (v.sign() > 0) levels.insert(v);
    }
  }
  if (levels.size() != 2) {
    throw Error(ErrorCode::kNotTernary,
                std::to_string(levels.size()) + " distinct positive values, need exactly 2");
  }
  return TernaryProfile{*levels.rbegin(), *levels.begin()};
}

Rational bundle_value(const Instance& inst, int agent, std::span<const int> items) {
  if (agent < 0 || agent >= inst.agents()) {
    throw Error(ErrorCode::kIndexOutOfRange, "agent " + std::to_string(agent));
  }
  Rational sum;
  for (int g : items) {
    if (g < 0 || g >= inst.items()) {
      throw Error(ErrorCode::kIndexOutOfRange, "item " + std::to_string(g));
    }
    sum += inst.value(agent, g);
  }
  return sum;
}

Instance scale(const Instance& inst, const Rational& factor) {
  if (factor.sign() <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "scale factor must be positive");
  }
  ValueMatrix raw = inst.matrix();
  for (auto& r : raw) {
    for (auto& v : r) v *= factor;
  }
  return validate_instance(raw);
}

Rational canonical_scale_factor(const Instance& inst) {
  std::int64_t den_lcm = 1;
  for (int i = 0; i < inst.agents(); ++i) {
    for (const Rational& v : inst.row(i)) den_lcm = lcm64(den_lcm, v.den());
  }
  std::int64_t num_gcd = 0;
  for (int i = 0; i < inst.agents(); ++i) {
    for (const Rational& v : inst.row(i)) {
      num_gcd = gcd64(num_gcd, (v * Rational(den_lcm)).num());
    }
  }
  // num_gcd > 0: a valid instance has a positive entry.
  return Rational(den_lcm, num_gcd);
}

Instance canonical_integer_form(const Instance& inst) {
  return scale(inst, canonical_scale_factor(inst));
}

Instance permute_items(const Instance& inst, std::span<const int> perm) {
  const int m = inst.items();
  if (static_cast<int>(perm.size()) != m) {
    throw Error(ErrorCode::kShapeMismatch, "permutation length differs from item count");
  }
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  for (int g : perm) {
    if (g < 0 || g >= m || seen[static_cast<std::size_t>(g)]) {
      throw Error(ErrorCode::kInvalidArgument, "not a permutation of the items");
    }
    seen[static_cast<std::size_t>(g)] = true;
  }
  ValueMatrix raw(static_cast<std::size_t>(inst.agents()));
  for (int i = 0; i < inst.agents(); ++i) {
    for (int g = 0; g < m; ++g) {
      raw[static_cast<std::size_t>(i)].push_back(inst.value(i, perm[static_cast<std::size_t>(g)]));
    }
  }
  return validate_instance(raw);
}

Instance sort_item_columns(const Instance& inst) {
  std::vector<int> perm(static_cast<std::size_t>(inst.items()));
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int x, int y) {
    for (int i = 0; i < inst.agents(); ++i) {
      const auto c = inst.value(i, x) <=> inst.value(i, y);
      if (c != 0) return c < 0;
    }
    return false;
  });
  return permute_items(inst, perm);
}

}  // namespace ef1
