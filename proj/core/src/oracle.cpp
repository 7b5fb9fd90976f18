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

#include "ef1/oracle.hpp"

#include <limits>
#include <string>
#include <vector>

#include "ef1/error.hpp"
#include "ef1/fairness.hpp"

namespace ef1 {

WelfareResult optimal_social_welfare(const Instance& inst) {
  std::vector<Bundle> bundles(static_cast<std::size_t>(inst.agents()));
  Rational total;
  for (int g = 0; g < inst.items(); ++g) {
    int best = 0;
    for (int i = 1; i < inst.agents(); ++i) {
      if (inst.value(i, g) > inst.value(best, g)) best = i;
    }
    bundles[static_cast<std::size_t>(best)].push_back(g);
    total += inst.value(best, g);
  }
  return {total, Allocation(std::move(bundles), inst.items())};
}

std::uint64_t allocation_count(int agents, int items) {
  std::uint64_t count = 1;
  for (int g = 0; g < items; ++g) {
    if (count > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(agents)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    count *= static_cast<std::uint64_t>(agents);
  }
  return count;
}

WelfareResult max_ef1_welfare(const Instance& inst, const OracleOptions& options) {
  const int n = inst.agents();
  const int m = inst.items();
  if (allocation_count(n, m) > options.budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                "n = " + std::to_string(n) + ", m = " + std::to_string(m) + ": " +
                    std::to_string(n) + "^" + std::to_string(m) + " allocations exceed budget " +
                    std::to_string(options.budget));
  }

  // Work on the primitive integer multiple of the matrix; EF1 and argmax are
  // invariant under positive scaling.
  const Rational factor = canonical_scale_factor(inst);
  const auto un = static_cast<std::size_t>(n);
  const auto um = static_cast<std::size_t>(m);
  std::vector<std::int64_t> v(un * um);
  for (int i = 0; i < n; ++i) {
    for (int g = 0; g < m; ++g) {
      v[static_cast<std::size_t>(i) * um + static_cast<std::size_t>(g)] =
          (inst.value(i, g) * factor).num();
    }
  }

  std::vector<int> owner(um, 0);
  std::vector<std::int64_t> sum(un * un);   // sum[i * n + j] = v_i(A_j)
  std::vector<std::int64_t> top(un * un);   // top[i * n + j] = max_{g in A_j} v_i(g)
  std::vector<int> size(un);

  std::vector<int> best_owner;
  std::int64_t best_welfare = -1;

  while (true) {
    std::fill(sum.begin(), sum.end(), 0);
    std::fill(top.begin(), top.end(), 0);
    std::fill(size.begin(), size.end(), 0);
    for (std::size_t g = 0; g < um; ++g) {
      const auto j = static_cast<std::size_t>(owner[g]);
      ++size[j];
      for (std::size_t i = 0; i < un; ++i) {
        const std::int64_t val = v[i * um + g];
        sum[i * un + j] += val;
        if (val > top[i * un + j]) top[i * un + j] = val;
      }
    }
    bool ef1 = true;
    std::int64_t welfare = 0;
    for (std::size_t i = 0; i < un && ef1; ++i) {
      const std::int64_t own = sum[i * un + i];
      welfare += own;
      for (std::size_t j = 0; j < un; ++j) {
        if (j == i || size[j] == 0) continue;
        if (own < sum[i * un + j] - top[i * un + j]) {
          ef1 = false;
          break;
        }
      }
    }
    if (ef1 && welfare > best_welfare) {
      best_welfare = welfare;
      best_owner = owner;
    }

    int pos = m - 1;
    while (pos >= 0 && owner[static_cast<std::size_t>(pos)] == n - 1) {
      owner[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++owner[static_cast<std::size_t>(pos)];
  }

  // Round-Robin output is EF1, so the set is never empty.
  std::vector<Bundle> bundles(un);
  for (std::size_t g = 0; g < um; ++g) {
    bundles[static_cast<std::size_t>(best_owner[g])].push_back(static_cast<int>(g));
  }
  return {Rational(best_welfare) / factor, Allocation(std::move(bundles), m)};
}

PriceReport price_of_ef1(const Instance& inst, const OracleOptions& options) {
  WelfareResult ef1 = max_ef1_welfare(inst, options);
  WelfareResult opt = optimal_social_welfare(inst);
  const Rational price = opt.welfare / ef1.welfare;
  return {opt.welfare, std::move(opt.allocation), ef1.welfare, std::move(ef1.allocation), price};
}

Rational algorithm_ratio(const Instance& inst, AlgorithmKind kind) {
  const AlgorithmResult run = run_algorithm(inst, kind);
  return optimal_social_welfare(inst).welfare / run.welfare;
}

}  // namespace ef1
