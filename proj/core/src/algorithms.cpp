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

#include "ef1/algorithms.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "ef1/error.hpp"
#include "ef1/fairness.hpp"
#include "ef1/matching.hpp"

namespace ef1 {
namespace {

TernaryProfile require_ternary_normalized(const Instance& inst) {
  TernaryProfile levels = classify_ternary(inst);
  if (!is_normalized(inst)) {
    throw Error(ErrorCode::kNotNormalized, "agents' total values differ");
  }
  return levels;
}

std::vector<int> rank_identity(int size) {
  std::vector<int> out(static_cast<std::size_t>(size));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

// Tie-break position of each item.
std::vector<int> resolve_rank(const Instance& inst, std::span<const int> item_rank) {
  if (item_rank.empty()) return rank_identity(inst.items());
  std::vector<int> check(item_rank.begin(), item_rank.end());
  std::sort(check.begin(), check.end());
  if (check != rank_identity(inst.items())) {
    throw Error(ErrorCode::kInvalidArgument, "item rank is not a permutation of the items");
  }
  return {item_rank.begin(), item_rank.end()};
}

void erase_item(std::vector<int>& pool, int item) {
  pool.erase(std::find(pool.begin(), pool.end(), item));
}

}  // namespace

std::string_view algorithm_name(AlgorithmKind kind) {
  switch (kind) {
    case AlgorithmKind::kRoundRobin: return "round-robin";
    case AlgorithmKind::kM2rr: return "m2rr";
    case AlgorithmKind::kRmm: return "rmm";
  }
  return "unknown";
}

std::optional<AlgorithmKind> parse_algorithm(std::string_view name) {
  if (name == "round-robin" || name == "round_robin") return AlgorithmKind::kRoundRobin;
  if (name == "m2rr") return AlgorithmKind::kM2rr;
  if (name == "rmm") return AlgorithmKind::kRmm;
  return std::nullopt;
}

AlgorithmRun round_robin(const Instance& inst, std::span<const int> order,
                         std::span<const int> item_rank) {
  const int n = inst.agents();
  const std::vector<int> rank = resolve_rank(inst, item_rank);
  std::vector<int> check(order.begin(), order.end());
  std::sort(check.begin(), check.end());
  if (check != rank_identity(n)) {
    throw Error(ErrorCode::kInvalidArgument, "order is not a permutation of the agents");
  }

  std::vector<int> pool(static_cast<std::size_t>(inst.items()));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<Bundle> bundles(static_cast<std::size_t>(n));
  AlgorithmTrace trace;

  for (int round = 1; !pool.empty(); ++round) {
    TraceRound tr{round, {}};
    for (int agent : order) {
      if (pool.empty()) break;
      int best = pool.front();
      for (int g : pool) {
        const auto c = inst.value(agent, g) <=> inst.value(agent, best);
        if (c > 0 || (c == 0 && rank[static_cast<std::size_t>(g)] < rank[static_cast<std::size_t>(best)])) {
          best = g;
        }
      }
      bundles[static_cast<std::size_t>(agent)].push_back(best);
      erase_item(pool, best);
      tr.events.emplace_back(PickEvent{agent, best});
    }
    trace.rounds.push_back(std::move(tr));
  }
  return {Allocation(std::move(bundles), inst.items()), std::move(trace)};
}

AlgorithmRun m2rr(const Instance& inst, std::span<const int> item_rank) {
  if (inst.agents() != 2) {
    throw Error(ErrorCode::kNotTwoAgents, std::to_string(inst.agents()) + " agents");
  }
  const TernaryProfile levels = require_ternary_normalized(inst);
  const std::vector<int> rank = resolve_rank(inst, item_rank);

  auto count_top = [&](int agent) {
    const auto r = inst.row(agent);
    return std::count(r.begin(), r.end(), levels.a);
  };
  const std::array<int, 2> order =
      count_top(1) > count_top(0) ? std::array<int, 2>{1, 0} : std::array<int, 2>{0, 1};

  std::vector<int> pool(static_cast<std::size_t>(inst.items()));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<Bundle> bundles(2);
  AlgorithmTrace trace;

  for (int round = 1; !pool.empty(); ++round) {
    TraceRound tr{round, {}};
    for (int turn = 0; turn < 2 && !pool.empty(); ++turn) {
      const int mover = order[static_cast<std::size_t>(turn)];
      const int other = order[static_cast<std::size_t>(1 - turn)];

      const bool values_nothing = std::all_of(
          pool.begin(), pool.end(), [&](int g) { return inst.value(mover, g).is_zero(); });
      if (values_nothing) {
        auto& dest = bundles[static_cast<std::size_t>(other)];
        dest.insert(dest.end(), pool.begin(), pool.end());
        tr.events.emplace_back(DumpEvent{other, pool});
        pool.clear();
        break;
      }

      Rational top;
      for (int g : pool) top = std::max(top, inst.value(mover, g));
      int pick = -1;
      for (int g : pool) {
        if (inst.value(mover, g) != top) continue;
        if (pick < 0) {
          pick = g;
          continue;
        }
        const auto c = inst.value(other, g) <=> inst.value(other, pick);
        if (c < 0 || (c == 0 && rank[static_cast<std::size_t>(g)] < rank[static_cast<std::size_t>(pick)])) {
          pick = g;
        }
      }
      bundles[static_cast<std::size_t>(mover)].push_back(pick);
      erase_item(pool, pick);
      tr.events.emplace_back(PickEvent{mover, pick});
    }
    trace.rounds.push_back(std::move(tr));
  }
  return {Allocation(std::move(bundles), inst.items()), std::move(trace)};
}

AlgorithmRun rmm(const Instance& inst, std::span<const int> item_rank) {
  if (inst.agents() != 3) {
    throw Error(ErrorCode::kNotThreeAgents, std::to_string(inst.agents()) + " agents");
  }
  require_ternary_normalized(inst);
  const std::vector<int> rank = resolve_rank(inst, item_rank);

  std::vector<int> agents{0, 1, 2};
  std::vector<int> items(static_cast<std::size_t>(inst.items()));
  std::iota(items.begin(), items.end(), 0);
  std::vector<Bundle> bundles(3);
  AlgorithmTrace trace;

  for (int round = 1; !items.empty(); ++round) {
    const ValuationGraph graph(inst, agents, items);
    const Matching matching = non_wasteful_max_matching(graph, rank);

    TraceRound tr{round, {}};
    for (const auto& [agent, item] : matching.pairs) {
      bundles[static_cast<std::size_t>(agent)].push_back(item);
      erase_item(items, item);
      tr.events.emplace_back(PickEvent{agent, item});
    }
    const ValuationGraph remaining(inst, agents, items);
    std::vector<int> still_live;
    for (int agent : agents) {
      if (remaining.has_any_edge(agent)) {
        still_live.push_back(agent);
      } else {
        tr.events.emplace_back(RemoveAgentEvent{agent});
      }
    }
    agents = std::move(still_live);
    trace.rounds.push_back(std::move(tr));
  }
  return {Allocation(std::move(bundles), inst.items()), std::move(trace)};
}

AlgorithmResult run_algorithm(const Instance& inst, AlgorithmKind kind) {
  AlgorithmRun run;
  switch (kind) {
    case AlgorithmKind::kRoundRobin: {
      std::vector<int> order(static_cast<std::size_t>(inst.agents()));
      std::iota(order.begin(), order.end(), 0);
      run = round_robin(inst, order);
      break;
    }
    case AlgorithmKind::kM2rr:
      run = m2rr(inst);
      break;
    case AlgorithmKind::kRmm:
      run = rmm(inst);
      break;
  }
  Rational sw = social_welfare(inst, run.allocation);
  return {std::move(run.allocation), std::move(run.trace), sw};
}

bool algorithm_applicable(const Instance& inst, AlgorithmKind kind) {
  switch (kind) {
    case AlgorithmKind::kRoundRobin:
      return true;
    case AlgorithmKind::kM2rr:
    case AlgorithmKind::kRmm:
      if (inst.agents() != (kind == AlgorithmKind::kM2rr ? 2 : 3)) return false;
      return distinct_positive_levels(inst) == 2 && is_normalized(inst);
  }
  return false;
}

}  // namespace ef1
