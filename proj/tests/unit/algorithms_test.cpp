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

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "ef1/algorithms.hpp"
#include "ef1/error.hpp"
#include "ef1/fairness.hpp"
#include "ef1/generators.hpp"
#include "ef1/oracle.hpp"
#include "support/naive_oracles.hpp"

namespace ef1 {
namespace {

using testing::int_instance;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvalidArgument;
}

const std::vector<int> kOrder01{0, 1};

TEST(RoundRobinTest, LowestIndexTieBreak) {
  const Instance inst = int_instance({{2, 1, 1, 0}, {1, 1, 1, 1}});
  const AlgorithmRun run = round_robin(inst, kOrder01);
  EXPECT_EQ(run.allocation.bundles(), (std::vector<Bundle>{{0, 2}, {1, 3}}));
  EXPECT_EQ(social_welfare(inst, run.allocation), Rational(5));
  EXPECT_EQ(replay_trace(run.trace, 2, 4), run.allocation);
  EXPECT_EQ(run.trace.rounds.size(), 2u);
}

TEST(RoundRobinTest, IdentityValuations) {
  const Instance inst = int_instance({{1, 0}, {0, 1}});
  EXPECT_EQ(round_robin(inst, kOrder01).allocation.bundles(), (std::vector<Bundle>{{0}, {1}}));
}

TEST(RoundRobinTest, PicksZeroValuedItemsAndRespectsOrder) {
  const Instance inst = int_instance({{2, 2, 0, 0, 0, 0}, {0, 0, 1, 1, 1, 1}});
  const AlgorithmRun run = round_robin(inst, std::vector<int>{1, 0});
  // Agent 1 first: 2; agent 0: 0; agent 1: 3; agent 0: 1; agent 1: 4; agent 0
  // takes the zero-valued item 5.
  EXPECT_EQ(run.allocation.bundles(), (std::vector<Bundle>{{0, 1, 5}, {2, 3, 4}}));
  EXPECT_TRUE(run.allocation.complete());
  EXPECT_EQ(code_of([&] { round_robin(inst, std::vector<int>{0, 0}); }), ErrorCode::kInvalidArgument);
}

TEST(M2rrTest, TwoAgentTightInstance) {
  const Instance inst = int_instance({{3, 3, 3, 0}, {2, 2, 2, 3}});
  const AlgorithmRun run = m2rr(inst);
  EXPECT_EQ(run.allocation.bundles(), (std::vector<Bundle>{{0, 1}, {3, 2}}));
  EXPECT_EQ(social_welfare(inst, run.allocation), Rational(11));
  EXPECT_EQ(social_welfare(gen_two_agent_tight(), m2rr(gen_two_agent_tight()).allocation),
            Rational(11, 2));
}

TEST(M2rrTest, OtherAgentValueBreaksTies) {
  const Instance inst = int_instance({{2, 1, 1, 0}, {1, 1, 1, 1}});
  const AlgorithmRun run = m2rr(inst);
  EXPECT_EQ(run.allocation.bundles(), (std::vector<Bundle>{{0, 1}, {3, 2}}));
  EXPECT_EQ(social_welfare(inst, run.allocation), Rational(5));
}

TEST(M2rrTest, LoopReturnsToFirstAgent) {
  // Equal a-counts keep input order: agent 0 takes 0, agent 1 takes 2, then
  // agent 0 still values item 1 and takes it.
  const Instance inst = int_instance({{2, 1, 0}, {0, 1, 2}});
  const AlgorithmRun run = m2rr(inst);
  EXPECT_EQ(run.allocation.bundles(), (std::vector<Bundle>{{0, 1}, {2}}));
  EXPECT_EQ(social_welfare(inst, run.allocation), Rational(5));
  EXPECT_EQ(replay_trace(run.trace, 2, 3), run.allocation);
  EXPECT_EQ(optimal_social_welfare(inst).welfare, Rational(5));
}

TEST(M2rrTest, PoolDumpWhenMoverValuesNothing) {
  const Instance inst = int_instance({{2, 2, 0, 0, 0, 0}, {0, 0, 1, 1, 1, 1}});
  const AlgorithmRun run = m2rr(inst);
  EXPECT_EQ(run.allocation.bundles(), (std::vector<Bundle>{{0, 1}, {2, 3, 4, 5}}));
  ASSERT_EQ(run.trace.rounds.size(), 3u);
  ASSERT_EQ(run.trace.rounds[2].events.size(), 1u);
  EXPECT_EQ(run.trace.rounds[2].events[0], TraceEvent(DumpEvent{1, {4, 5}}));
  EXPECT_EQ(social_welfare(inst, run.allocation), Rational(8));
  // Plain Round-Robin gives agent 0 a zero-valued item instead.
  EXPECT_NE(round_robin(inst, kOrder01).allocation, run.allocation);
}

TEST(M2rrTest, AgentWithMoreTopItemsMovesFirst) {
  const Instance inst = int_instance({{1, 1, 1, 1}, {2, 2, 0, 0}});
  const AlgorithmRun run = m2rr(inst);
  ASSERT_FALSE(run.trace.rounds.empty());
  EXPECT_EQ(run.trace.rounds[0].events[0], TraceEvent(PickEvent{1, 0}));
  EXPECT_EQ(run.allocation.bundles(), (std::vector<Bundle>{{2, 3}, {0, 1}}));
}

TEST(M2rrTest, Gates) {
  EXPECT_EQ(code_of([] { m2rr(gen_three_agent_tight()); }), ErrorCode::kNotTwoAgents);
  EXPECT_EQ(code_of([] { m2rr(gen_intro_example()); }), ErrorCode::kNotTernary);
  EXPECT_EQ(code_of([] { m2rr(int_instance({{2, 0}, {0, 2}})); }), ErrorCode::kNotTernary);
  EXPECT_EQ(code_of([] { m2rr(int_instance({{2, 1}, {1, 1}})); }), ErrorCode::kNotNormalized);
}

TEST(RmmTest, ThreeAgentTightInstance) {
  const Instance inst = gen_three_agent_tight();
  const AlgorithmRun run = rmm(inst);
  ASSERT_EQ(run.trace.rounds.size(), 2u);
  const auto& r1 = run.trace.rounds[0].events;
  ASSERT_EQ(r1.size(), 3u);
  EXPECT_EQ(r1[0], TraceEvent(PickEvent{0, 0}));
  EXPECT_EQ(r1[1], TraceEvent(PickEvent{1, 3}));
  EXPECT_EQ(r1[2], TraceEvent(PickEvent{2, 1}));
  const auto& r2 = run.trace.rounds[1].events;
  ASSERT_GE(r2.size(), 3u);
  EXPECT_EQ(r2[0], TraceEvent(PickEvent{0, 2}));
  EXPECT_EQ(r2[1], TraceEvent(PickEvent{1, 4}));
  EXPECT_EQ(r2[2], TraceEvent(PickEvent{2, 5}));
  EXPECT_EQ(social_welfare(inst, run.allocation), Rational(10));
  EXPECT_EQ(replay_trace(run.trace, 3, 6), run.allocation);
}

TEST(RmmTest, DiagonalPlusSharedItem) {
  const Instance inst = int_instance({{2, 1, 0, 0}, {0, 1, 2, 0}, {0, 1, 0, 2}});
  const AlgorithmRun run = rmm(inst);
  EXPECT_EQ(run.allocation.bundles(), (std::vector<Bundle>{{0, 1}, {2}, {3}}));
  EXPECT_EQ(social_welfare(inst, run.allocation), Rational(7));
  ASSERT_EQ(run.trace.rounds.size(), 2u);
  // Only item 1 is left after round 1; every agent still values it.
  for (const auto& e : run.trace.rounds[0].events) EXPECT_TRUE(std::holds_alternative<PickEvent>(e));
}

TEST(RmmTest, RemovesAgentsWithoutEdges) {
  // Agent 0 only values items 0 and 1; after round 1 takes item 0 and someone
  // else takes item 1, agent 0 drops out while items remain.
  const Instance inst = int_instance({{2, 2, 0, 0, 0, 0}, {0, 2, 1, 1, 0, 0}, {0, 0, 1, 1, 1, 1}});
  const AlgorithmRun run = rmm(inst);
  bool removed_zero_early = false;
  for (std::size_t r = 0; r + 1 < run.trace.rounds.size(); ++r) {
    for (const auto& e : run.trace.rounds[r].events) {
      if (e == TraceEvent(RemoveAgentEvent{0})) removed_zero_early = true;
    }
  }
  EXPECT_TRUE(removed_zero_early);
  EXPECT_TRUE(run.allocation.complete());
  EXPECT_TRUE(is_ef1(inst, run.allocation).holds);
  EXPECT_EQ(replay_trace(run.trace, 3, 6), run.allocation);
}

TEST(RmmTest, Gates) {
  EXPECT_EQ(code_of([] { rmm(gen_two_agent_tight()); }), ErrorCode::kNotThreeAgents);
  EXPECT_EQ(code_of([] { rmm(int_instance({{3, 2, 1}, {1, 2, 3}, {2, 2, 2}})); }), ErrorCode::kNotTernary);
  EXPECT_EQ(code_of([] { rmm(int_instance({{2, 1}, {1, 1}, {1, 1}})); }), ErrorCode::kNotNormalized);
}

TEST(RunAlgorithmTest, Dispatch) {
  EXPECT_EQ(run_algorithm(int_instance({{3, 3, 3, 0}, {2, 2, 2, 3}}), AlgorithmKind::kM2rr).welfare, Rational(11));
  EXPECT_EQ(run_algorithm(gen_three_agent_tight(), AlgorithmKind::kRmm).welfare, Rational(10));
  const Instance intro = gen_intro_example();
  EXPECT_LE(run_algorithm(intro, AlgorithmKind::kRoundRobin).welfare, optimal_social_welfare(intro).welfare);
  EXPECT_EQ(parse_algorithm("round-robin"), AlgorithmKind::kRoundRobin);
  EXPECT_EQ(parse_algorithm("m2rr"), AlgorithmKind::kM2rr);
  EXPECT_FALSE(parse_algorithm("opt-ef1").has_value());
  EXPECT_TRUE(algorithm_applicable(gen_two_agent_tight(), AlgorithmKind::kM2rr));
  EXPECT_FALSE(algorithm_applicable(gen_two_agent_tight(), AlgorithmKind::kRmm));
  EXPECT_FALSE(algorithm_applicable(intro, AlgorithmKind::kM2rr));
}

// Item g of the permuted instance is item perm[g] of the original; ranking it
// at perm[g] reproduces the original tie-breaks.
std::vector<Bundle> map_back(const Allocation& a, const std::vector<int>& perm) {
  std::vector<Bundle> out;
  for (const Bundle& b : a.bundles()) {
    Bundle mapped;
    for (int g : b) mapped.push_back(perm[static_cast<std::size_t>(g)]);
    std::sort(mapped.begin(), mapped.end());
    out.push_back(std::move(mapped));
  }
  return out;
}

TEST(AlgorithmProperty, EveryOutputIsCompleteEf1AndReplayable) {
  for (int n : {2, 3}) {
    EnumerationParams params{n, n == 2 ? 6 : 5, {{2, 1}, {3, 2}}, true};
    const AlgorithmKind kind = n == 2 ? AlgorithmKind::kM2rr : AlgorithmKind::kRmm;
    std::size_t count = 0;
    for (const auto& [inst, lp] : enumerate_ternary_instances(params)) {
      const AlgorithmResult run = run_algorithm(inst, kind);
      ASSERT_TRUE(run.allocation.complete());
      ASSERT_TRUE(is_ef1(inst, run.allocation).holds);
      ASSERT_EQ(replay_trace(run.trace, n, inst.items()), run.allocation);
      ASSERT_EQ(run_algorithm(inst, kind).trace, run.trace);
      const AlgorithmResult rr = run_algorithm(inst, AlgorithmKind::kRoundRobin);
      ASSERT_TRUE(is_ef1(inst, rr.allocation).holds);
      ++count;
    }
    EXPECT_GT(count, 10u);
  }
}

TEST(AlgorithmProperty, ItemRelabelingCovariance) {
  std::mt19937 rng(29);
  for (int n : {2, 3}) {
    EnumerationParams params{n, n == 2 ? 6 : 5, {{2, 1}, {3, 1}}, true};
    for (const auto& [inst, lp] : enumerate_ternary_instances(params)) {
      std::vector<int> perm(static_cast<std::size_t>(inst.items()));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const Instance permuted = permute_items(inst, perm);

      if (n == 2) {
        EXPECT_EQ(map_back(m2rr(permuted, perm).allocation, perm), m2rr(inst).allocation.sorted().bundles());
        EXPECT_EQ(map_back(round_robin(permuted, kOrder01, perm).allocation, perm),
                  round_robin(inst, kOrder01).allocation.sorted().bundles());
      } else {
        EXPECT_EQ(map_back(rmm(permuted, perm).allocation, perm), rmm(inst).allocation.sorted().bundles());
      }
    }
  }
}

TEST(AlgorithmProperty, WelfareBoundedByEf1Optimum) {
  std::size_t count = 0;
  for (int n : {2, 3}) {
    EnumerationParams params{n, n == 2 ? 6 : 4, {{3, 2}, {4, 3}}, true};
    const AlgorithmKind kind = n == 2 ? AlgorithmKind::kM2rr : AlgorithmKind::kRmm;
    for (const auto& [inst, lp] : enumerate_ternary_instances(params)) {
      const Rational sw = run_algorithm(inst, kind).welfare;
      EXPECT_LE(sw, max_ef1_welfare(inst).welfare);
      ++count;
    }
  }
  EXPECT_GT(count, 10u);
}

}  // namespace
}  // namespace ef1
