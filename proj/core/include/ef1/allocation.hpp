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

#ifndef EF1_ALLOCATION_HPP_
#define EF1_ALLOCATION_HPP_

#include <optional>
#include <span>
#include <vector>

namespace ef1 {

using Bundle = std::vector<int>;

// One bundle per agent. Bundles keep the order in which items were received;
// set semantics (disjointness, membership) are what the invariants constrain.
class Allocation {
 public:
  Allocation() = default;

  // Throws kIndexOutOfRange for an item outside [0, items) and
  // kInvalidArgument when an item appears twice.
  Allocation(std::vector<Bundle> bundles, int items);

  static Allocation empty(int agents, int items);

  int agents() const noexcept { return static_cast<int>(bundles_.size()); }
  int items() const noexcept { return items_; }
  std::span<const int> bundle(int agent) const { return bundles_[static_cast<std::size_t>(agent)]; }
  const std::vector<Bundle>& bundles() const noexcept { return bundles_; }

  // Union of the bundles is exactly {0..items-1}.
  bool complete() const;
  std::optional<int> owner(int item) const;

  // Same bundles with each bundle sorted ascending.
  Allocation sorted() const;

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  std::vector<Bundle> bundles_;
  int items_ = 0;
};

}  // namespace ef1

#endif  // EF1_ALLOCATION_HPP_
