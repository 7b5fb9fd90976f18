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

#ifndef EF1_ORACLE_HPP_
#define EF1_ORACLE_HPP_

#include <cstdint>

#include "ef1/algorithms.hpp"
#include "ef1/allocation.hpp"
#include "ef1/instance.hpp"
#include "ef1/rational.hpp"

namespace ef1 {

inline constexpr std::uint64_t kDefaultAllocationBudget = 100'000'000;

struct OracleOptions {
  // Upper bound on n^m complete allocations the EF1 brute force may visit.
  std::uint64_t budget = kDefaultAllocationBudget;
};

struct WelfareResult {
  Rational welfare;
  Allocation allocation;
};

struct PriceReport {
  Rational opt;
  Allocation opt_allocation;
  Rational ef1_opt;
  Allocation ef1_opt_allocation;
  Rational price;
};

// Each item to an agent valuing it most (lowest agent index on ties).
WelfareResult optimal_social_welfare(const Instance& inst);

// Number of complete allocations, n^m, saturating at UINT64_MAX.
std::uint64_t allocation_count(int agents, int items);

// Brute force over all n^m complete allocations. The enumeration is a base-n
// counter in which item g's digit is its receiving agent and the last item is
// the least significant digit; the reported witness is the first maximum in
// that order. Throws kBudgetExceeded when n^m exceeds the budget.
WelfareResult max_ef1_welfare(const Instance& inst, const OracleOptions& options = {});

PriceReport price_of_ef1(const Instance& inst, const OracleOptions& options = {});

// Optimal welfare divided by the welfare of the algorithm's output.
Rational algorithm_ratio(const Instance& inst, AlgorithmKind kind);

}  // namespace ef1

#endif  // EF1_ORACLE_HPP_
