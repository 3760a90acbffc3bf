// Copyright 2026 The Seqgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SEQGAME_SRC_PRODUCT_H_
#define SEQGAME_SRC_PRODUCT_H_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace seqgame::internal {

// Calls visit(pick) for every element of the cartesian product of `lists`,
// with pick[i] an index into lists[i]. The first list varies slowest.
template <typename T>
void ForEachProduct(std::span<const std::vector<T>> lists,
                    const std::function<void(std::span<const std::size_t>)>& visit) {
  for (const auto& l : lists) {
    if (l.empty()) return;
  }
  std::vector<std::size_t> pick(lists.size(), 0);
  while (true) {
    visit(pick);
    std::size_t i = lists.size();
    while (i > 0) {
      --i;
      if (++pick[i] < lists[i].size()) break;
      pick[i] = 0;
      if (i == 0) return;
    }
    if (lists.empty()) return;
  }
}

}  // namespace seqgame::internal

#endif  // SEQGAME_SRC_PRODUCT_H_
