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

#include "ef1/fairness.hpp"

#include <string>

#include "ef1/error.hpp"

namespace ef1 {
namespace {

void check_shape(const Instance& inst, const Allocation& alloc) {
  if (alloc.agents() != inst.agents() || alloc.items() != inst.items()) {
    throw Error(ErrorCode::kShapeMismatch,
                "allocation is " + std::to_string(alloc.agents()) + "x" +
                    std::to_string(alloc.items()) + ", instance is " +
                    std::to_string(inst.agents()) + "x" + std::to_string(inst.items()));
  }
}

}  // namespace

Rational social_welfare(const Instance& inst, const Allocation& alloc) {
  check_shape(inst, alloc);
  Rational sw;
  for (int i = 0; i < inst.agents(); ++i) sw += bundle_value(inst, i, alloc.bundle(i));
  return sw;
}

bool is_envy_free(const Instance& inst, const Allocation& alloc) {
  check_shape(inst, alloc);
  for (int i = 0; i < inst.agents(); ++i) {
    const Rational own = bundle_value(inst, i, alloc.bundle(i));
    for (int j = 0; j < inst.agents(); ++j) {
      if (j != i && own < bundle_value(inst, i, alloc.bundle(j))) return false;
    }
  }
  return true;
}

Ef1Report is_ef1(const Instance& inst, const Allocation& alloc) {
  check_shape(inst, alloc);
  Ef1Report report;
  for (int i = 0; i < inst.agents(); ++i) {
    const Rational own = bundle_value(inst, i, alloc.bundle(i));
    for (int j = 0; j < inst.agents(); ++j) {
      if (j == i) continue;
      const auto other = alloc.bundle(j);
      const Rational envied_value = bundle_value(inst, i, other);
      if (!(own < envied_value)) continue;

      // other is non-empty here, since v_i(empty) = 0 <= own.
      int best = other.front();
      for (int g : other) {
        const auto c = inst.value(i, g) <=> inst.value(i, best);
        if (c > 0 || (c == 0 && g < best)) best = g;
      }
      EnvyWitness w{i, j, std::nullopt};
      if (own >= envied_value - inst.value(i, best)) {
        w.item = best;
      } else {
        report.violations.push_back({i, j});
      }
      report.witnesses.push_back(w);
    }
  }
  report.holds = report.violations.empty();
  return report;
}

}  // namespace ef1
