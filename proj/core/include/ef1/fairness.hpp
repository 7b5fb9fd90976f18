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

#ifndef EF1_FAIRNESS_HPP_
#define EF1_FAIRNESS_HPP_

#include <optional>
#include <vector>

#include "ef1/allocation.hpp"
#include "ef1/instance.hpp"
#include "ef1/rational.hpp"

namespace ef1 {

struct EnvyPair {
  int envious = 0;
  int envied = 0;
  friend bool operator==(const EnvyPair&, const EnvyPair&) = default;
};

// For an ordered pair (i, j) where i envies j: the item of A_j whose removal
// eliminates the envy, if one exists.
struct EnvyWitness {
  int envious = 0;
  int envied = 0;
  std::optional<int> item;
  friend bool operator==(const EnvyWitness&, const EnvyWitness&) = default;
};

struct Ef1Report {
  bool holds = true;
  std::vector<EnvyPair> violations;
  std::vector<EnvyWitness> witnesses;
};

// All three accept incomplete allocations and throw kShapeMismatch when the
// allocation's agent or item count differs from the instance.
Rational social_welfare(const Instance& inst, const Allocation& alloc);
bool is_envy_free(const Instance& inst, const Allocation& alloc);

// Envy toward an empty bundle is impossible, so such pairs never appear. When
// several items qualify as witness the one agent i values most is reported,
// lowest index first.
Ef1Report is_ef1(const Instance& inst, const Allocation& alloc);

}  // namespace ef1

#endif  // EF1_FAIRNESS_HPP_
