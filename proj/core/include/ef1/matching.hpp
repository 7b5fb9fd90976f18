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

#ifndef EF1_MATCHING_HPP_
#define EF1_MATCHING_HPP_

#include <span>
#include <utility>
#include <vector>

#include "ef1/instance.hpp"
#include "ef1/rational.hpp"

namespace ef1 {

// Agent-item bipartite graph restricted to live agents and live items. An
// edge (i, g) exists iff both endpoints are live and v_i(g) > 0; its weight
// is v_i(g). The graph owns a copy of the instance.
class ValuationGraph {
 public:
  ValuationGraph(Instance inst, std::vector<int> live_agents, std::vector<int> live_items);

  // All agents and all items live.
  static ValuationGraph full(const Instance& inst);

  const Instance& instance() const noexcept { return inst_; }
  const std::vector<int>& live_agents() const noexcept { return agents_; }
  const std::vector<int>& live_items() const noexcept { return items_; }

  bool is_live_agent(int agent) const;
  bool is_live_item(int item) const;
  bool has_edge(int agent, int item) const;
  bool has_any_edge(int agent) const;
  int edge_count() const;
  // Zero when there is no edge.
  Rational weight(int agent, int item) const;

  // Highest value any other live agent has for `item`.
  Rational penalty(int agent, int item) const;

 private:
  Instance inst_;
  std::vector<int> agents_;
  std::vector<int> items_;
  std::vector<bool> agent_live_;
  std::vector<bool> item_live_;
};

struct Matching {
  // (agent, item), sorted by agent; each agent and item appears at most once.
  std::vector<std::pair<int, int>> pairs;

  friend bool operator==(const Matching&, const Matching&) = default;
};

inline constexpr int kMaxMatchingAgents = 3;

Rational matching_weight(const ValuationGraph& g, const Matching& m);

// Per-pair penalties sorted descending.
std::vector<Rational> penalty_vector(const ValuationGraph& g, const Matching& m);

// Every maximum-weight matching, by exhaustive search over injections of the
// live agents into the live items. Throws kTooManyAgents above 3 live agents.
// Empty when the graph has no edge.
std::vector<Matching> enumerate_max_weight_matchings(const ValuationGraph& g);

// The maximum-weight matching whose descending penalty vector is
// lexicographically smallest; remaining ties go to the lexicographically
// smallest pair list, items compared by `item_rank` (item_rank[g] is the
// tie-break position of item g; empty means index order). Throws kEmptyGraph
// when there is no edge.
Matching non_wasteful_max_matching(const ValuationGraph& g, std::span<const int> item_rank = {});

// No matched (i, g) could be swapped for an unmatched live item q with
// v_i(q) = v_i(g) and a strictly smaller penalty.
bool satisfies_exchange_property(const ValuationGraph& g, const Matching& m);

}  // namespace ef1

#endif  // EF1_MATCHING_HPP_
