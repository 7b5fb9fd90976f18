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

#ifndef EF1_ALGORITHMS_HPP_
#define EF1_ALGORITHMS_HPP_

#include <optional>
#include <span>
#include <string_view>

#include "ef1/allocation.hpp"
#include "ef1/instance.hpp"
#include "ef1/rational.hpp"
#include "ef1/trace.hpp"

namespace ef1 {

enum class AlgorithmKind { kRoundRobin, kM2rr, kRmm };

std::string_view algorithm_name(AlgorithmKind kind);
// Accepts "round-robin", "round_robin", "m2rr", "rmm".
std::optional<AlgorithmKind> parse_algorithm(std::string_view name);

struct AlgorithmRun {
  Allocation allocation;
  AlgorithmTrace trace;
};

struct AlgorithmResult {
  Allocation allocation;
  AlgorithmTrace trace;
  Rational welfare;
};

// Plain Round-Robin: agents pick in `order`, cyclically, each taking a
// remaining item of maximum own value (lowest index on ties) until no items
// remain. Zero-valued items are picked too. One trace round per cycle.
//
// Every "lowest index" tie-break in this header can be redirected through an
// optional `item_rank`, where item_rank[g] is item g's tie-break position (a
// permutation of 0..m-1). Empty means index order.
AlgorithmRun round_robin(const Instance& inst, std::span<const int> order,
                         std::span<const int> item_rank = {});

// Two-agent round robin that breaks ties toward items the other agent values
// least and hands the whole pool to the other agent once the mover values
// every remaining item at zero. The agent with more top-level (a) items moves
// first; on equal counts input order is kept. Within the top-value set the
// item of least value to the other agent is taken, lowest index on ties.
// Requires n = 2 (kNotTwoAgents), ternary values (kNotTernary) and a
// normalized instance (kNotNormalized). One trace round per pair of turns.
AlgorithmRun m2rr(const Instance& inst, std::span<const int> item_rank = {});

// Repeated non-wasteful maximum-weight matching for three agents. Each round
// matches live agents to live items via non_wasteful_max_matching, removes
// the matched items, then removes agents left without edges. Requires n = 3
// (kNotThreeAgents), ternary and normalized.
AlgorithmRun rmm(const Instance& inst, std::span<const int> item_rank = {});

// Round-robin runs with the identity order.
AlgorithmResult run_algorithm(const Instance& inst, AlgorithmKind kind);

// Whether `kind` accepts `inst` (agent count, ternary, normalized).
bool algorithm_applicable(const Instance& inst, AlgorithmKind kind);

}  // namespace ef1

#endif  // EF1_ALGORITHMS_HPP_
