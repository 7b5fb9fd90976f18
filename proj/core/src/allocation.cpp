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

#include "ef1/allocation.hpp"

#include <algorithm>
#include <string>

#include "ef1/error.hpp"

namespace ef1 {

Allocation::Allocation(std::vector<Bundle> bundles, int items)
    : bundles_(std::move(bundles)), items_(items) {
  std::vector<bool> seen(static_cast<std::size_t>(items), false);
  for (const Bundle& b : bundles_) {
    for (int g : b) {
      if (g < 0 || g >= items) {
        throw Error(ErrorCode::kIndexOutOfRange,
                    "item " + std::to_string(g) + " outside [0, " + std::to_string(items) + ")");
      }
      if (seen[static_cast<std::size_t>(g)]) {
        throw Error(ErrorCode::kInvalidArgument,
                    "item " + std::to_string(g) + " allocated twice");
      }
      seen[static_cast<std::size_t>(g)] = true;
    }
  }
}

Allocation Allocation::empty(int agents, int items) {
  return Allocation(std::vector<Bundle>(static_cast<std::size_t>(agents)), items);
}

bool Allocation::complete() const {
  std::size_t total = 0;
  for (const Bundle& b : bundles_) total += b.size();
  return total == static_cast<std::size_t>(items_);
}

std::optional<int> Allocation::owner(int item) const {
  for (std::size_t i = 0; i < bundles_.size(); ++i) {
    if (std::find(bundles_[i].begin(), bundles_[i].end(), item) != bundles_[i].end()) {
      return static_cast<int>(i);
    }
  }
  return std::nullopt;
}

Allocation Allocation::sorted() const {
  Allocation out = *this;
  for (Bundle& b : out.bundles_) std::sort(b.begin(), b.end());
  return out;
}

}  // namespace ef1
