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

#ifndef EF1_TRACE_HPP_
#define EF1_TRACE_HPP_

#include <variant>
#include <vector>

#include "ef1/allocation.hpp"

namespace ef1 {

struct PickEvent {
  int agent = 0;
  int item = 0;
  friend bool operator==(const PickEvent&, const PickEvent&) = default;
};

// The whole remaining pool handed to one agent.
struct DumpEvent {
  int to = 0;
  std::vector<int> items;
  friend bool operator==(const DumpEvent&, const DumpEvent&) = default;
};

struct RemoveAgentEvent {
  int agent = 0;
  friend bool operator==(const RemoveAgentEvent&, const RemoveAgentEvent&) = default;
};

using TraceEvent = std::variant<PickEvent, DumpEvent, RemoveAgentEvent>;

struct TraceRound {
  int round = 0;
  std::vector<TraceEvent> events;
  friend bool operator==(const TraceRound&, const TraceRound&) = default;
};

struct AlgorithmTrace {
  std::vector<TraceRound> rounds;
  friend bool operator==(const AlgorithmTrace&, const AlgorithmTrace&) = default;
};

// Rebuilds the allocation a trace describes. Throws kTraceMismatch for an
// agent or item outside the given shape, or an item handed out twice.
Allocation replay_trace(const AlgorithmTrace& trace, int agents, int items);

}  // namespace ef1

#endif  // EF1_TRACE_HPP_
