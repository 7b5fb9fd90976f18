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

#include "ef1/trace.hpp"

#include <string>

#include "ef1/error.hpp"

namespace ef1 {

Allocation replay_trace(const AlgorithmTrace& trace, int agents, int items) {
  std::vector<Bundle> bundles(static_cast<std::size_t>(agents));
  std::vector<bool> taken(static_cast<std::size_t>(items), false);

  auto check_agent = [&](int agent) {
    if (agent < 0 || agent >= agents) {
      throw Error(ErrorCode::kTraceMismatch, "trace references agent " + std::to_string(agent) +
                                                 " but the instance has " +
                                                 std::to_string(agents));
    }
  };
  auto give = [&](int agent, int item) {
    check_agent(agent);
    if (item < 0 || item >= items) {
      throw Error(ErrorCode::kTraceMismatch, "trace references item " + std::to_string(item) +
                                                 " but the instance has " +
                                                 std::to_string(items));
    }
    if (taken[static_cast<std::size_t>(item)]) {
      throw Error(ErrorCode::kTraceMismatch, "item " + std::to_string(item) + " handed out twice");
    }
    taken[static_cast<std::size_t>(item)] = true;
    bundles[static_cast<std::size_t>(agent)].push_back(item);
  };

  for (const TraceRound& round : trace.rounds) {
    for (const TraceEvent& event : round.events) {
      if (const auto* pick = std::get_if<PickEvent>(&event)) {
        give(pick->agent, pick->item);
      } else if (const auto* dump = std::get_if<DumpEvent>(&event)) {
        for (int g : dump->items) give(dump->to, g);
      } else {
        check_agent(std::get<RemoveAgentEvent>(event).agent);
      }
    }
  }
  return Allocation(std::move(bundles), items);
}

}  // namespace ef1
