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

#include "ef1/matching.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "ef1/error.hpp"

namespace ef1 {

ValuationGraph::ValuationGraph(Instance inst, std::vector<int> live_agents,
                               std::vector<int> live_items)
    : inst_(std::move(inst)),
      agents_(std::move(live_agents)),
      items_(std::move(live_items)),
      agent_live_(static_cast<std::size_t>(inst_.agents()), false),
      item_live_(static_cast<std::size_t>(inst_.items()), false) {
  std::sort(agents_.begin(), agents_.end());
  std::sort(items_.begin(), items_.end());
  for (int i : agents_) {
    if (i < 0 || i >= inst_.agents() || agent_live_[static_cast<std::size_t>(i)]) {
      throw Error(ErrorCode::kIndexOutOfRange, "live agent " + std::to_string(i));
    }
    agent_live_[static_cast<std::size_t>(i)] = true;
  }
  for (int g : items_) {
    if (g < 0 || g >= inst_.items() || item_live_[static_cast<std::size_t>(g)]) {
      throw Error(ErrorCode::kIndexOutOfRange, "live item " + std::to_string(g));
    }
    item_live_[static_cast<std::size_t>(g)] = true;
  }
}

ValuationGraph ValuationGraph::full(const Instance& inst) {
  std::vector<int> agents(static_cast<std::size_t>(inst.agents()));
  std::vector<int> items(static_cast<std::size_t>(inst.items()));
  std::iota(agents.begin(), agents.end(), 0);
  std::iota(items.begin(), items.end(), 0);
  return ValuationGraph(inst, std::move(agents), std::move(items));
}

bool ValuationGraph::is_live_agent(int agent) const {
  return agent >= 0 && agent < inst_.agents() && agent_live_[static_cast<std::size_t>(agent)];
}

bool ValuationGraph::is_live_item(int item) const {
  return item >= 0 && item < inst_.items() && item_live_[static_cast<std::size_t>(item)];
}

bool ValuationGraph::has_edge(int agent, int item) const {
  return is_live_agent(agent) && is_live_item(item) && inst_.value(agent, item).sign() > 0;
}

bool ValuationGraph::has_any_edge(int agent) const {
  return std::any_of(items_.begin(), items_.end(),
                     [&](int g) { return has_edge(agent, g); });
}

int ValuationGraph::edge_count() const {
  int count = 0;
  for (int i : agents_) {
    for (int g : items_) count += has_edge(i, g) ? 1 : 0;
  }
  return count;
}

Rational ValuationGraph::weight(int agent, int item) const {
  return has_edge(agent, item) ? inst_.value(agent, item) : Rational(0);
}

Rational ValuationGraph::penalty(int agent, int item) const {
  Rational worst;
  for (int j : agents_) {
    if (j != agent) worst = std::max(worst, inst_.value(j, item));
  }
  return worst;
}

Rational matching_weight(const ValuationGraph& g, const Matching& m) {
  Rational total;
  for (const auto& [agent, item] : m.pairs) total += g.weight(agent, item);
  return total;
}

std::vector<Rational> penalty_vector(const ValuationGraph& g, const Matching& m) {
  std::vector<Rational> out;
  out.reserve(m.pairs.size());
  for (const auto& [agent, item] : m.pairs) out.push_back(g.penalty(agent, item));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<Matching> enumerate_max_weight_matchings(const ValuationGraph& g) {
  const auto& agents = g.live_agents();
  if (static_cast<int>(agents.size()) > kMaxMatchingAgents) {
    throw Error(ErrorCode::kTooManyAgents,
                std::to_string(agents.size()) + " live agents, at most " +
                    std::to_string(kMaxMatchingAgents) + " supported");
  }

  std::vector<Matching> best;
  Rational best_weight;
  Matching current;
  std::vector<bool> used(static_cast<std::size_t>(g.instance().items()), false);

  std::function<void(std::size_t, const Rational&)> visit = [&](std::size_t k,
                                                                const Rational& w) {
    if (k == agents.size()) {
      if (current.pairs.empty()) return;
      if (best.empty() || w > best_weight) {
        best.clear();
        best_weight = w;
      }
      if (w == best_weight) best.push_back(current);
      return;
    }
    const int agent = agents[k];
    for (int item : g.live_items()) {
      if (used[static_cast<std::size_t>(item)] || !g.has_edge(agent, item)) continue;
      used[static_cast<std::size_t>(item)] = true;
      current.pairs.emplace_back(agent, item);
      visit(k + 1, w + g.weight(agent, item));
      current.pairs.pop_back();
      used[static_cast<std::size_t>(item)] = false;
    }
    visit(k + 1, w);
  };
  visit(0, Rational(0));
  return best;
}

Matching non_wasteful_max_matching(const ValuationGraph& g, std::span<const int> item_rank) {
  if (g.edge_count() == 0) {
    throw Error(ErrorCode::kEmptyGraph, "no agent values any live item");
  }
  if (!item_rank.empty() && static_cast<int>(item_rank.size()) != g.instance().items()) {
    throw Error(ErrorCode::kShapeMismatch, "item rank length differs from item count");
  }
  auto ranked = [&](const Matching& m) {
    std::vector<std::pair<int, int>> out = m.pairs;
    if (!item_rank.empty()) {
      for (auto& p : out) p.second = item_rank[static_cast<std::size_t>(p.second)];
    }
    return out;
  };

  const auto candidates = enumerate_max_weight_matchings(g);
  const Matching* chosen = nullptr;
  std::vector<Rational> chosen_penalty;
  std::vector<std::pair<int, int>> chosen_key;
  for (const Matching& m : candidates) {
    auto p = penalty_vector(g, m);
    if (chosen != nullptr && chosen_penalty < p) continue;
    auto key = ranked(m);
    if (chosen == nullptr || p < chosen_penalty || key < chosen_key) {
      chosen = &m;
      chosen_penalty = std::move(p);
      chosen_key = std::move(key);
    }
  }
  return *chosen;
}

bool satisfies_exchange_property(const ValuationGraph& g, const Matching& m) {
  std::vector<bool> matched(static_cast<std::size_t>(g.instance().items()), false);
  for (const auto& pair : m.pairs) matched[static_cast<std::size_t>(pair.second)] = true;
  for (const auto& [agent, item] : m.pairs) {
    const Rational own = g.weight(agent, item);
    const Rational pen = g.penalty(agent, item);
    for (int q : g.live_items()) {
      if (matched[static_cast<std::size_t>(q)]) continue;
      if (g.weight(agent, q) == own && g.penalty(agent, q) < pen) return false;
    }
  }
  return true;
}

}  // namespace ef1
