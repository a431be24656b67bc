// Copyright 2026 The f2q Authors
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

#include "f2q/fenwick.hpp"

#include <algorithm>

#include "f2q/errors.hpp"

namespace f2q {

FenwickTree::FenwickTree(std::uint32_t modes)
    : modes_(modes),
      parent_(modes, -1),
      children_(modes),
      update_(modes),
      remainder_(modes),
      parity_(modes) {
  if (modes == 0) throw ValidationError("Fenwick tree needs at least 1 mode");

  // fenwick(left, right, parent): connect (left+right)/2 under parent and
  // recurse into both halves.
  auto build = [&](auto&& self, std::uint32_t left, std::uint32_t right,
                   std::uint32_t par) -> void {
    if (left >= right) return;
    const std::uint32_t pivot = (left + right) >> 1;
    parent_[pivot] = static_cast<int>(par);
    children_[par].push_back(pivot);
    self(self, left, pivot, pivot);
    self(self, pivot + 1, right, par);
  };
  build(build, 0, modes - 1, modes - 1);

  for (auto& c : children_) std::sort(c.begin(), c.end());

  for (std::uint32_t j = 0; j < modes; ++j) {
    for (int p = parent_[j]; p != -1; p = parent_[p]) {
      update_[j].push_back(static_cast<std::uint32_t>(p));
    }
    std::sort(update_[j].begin(), update_[j].end());

    for (std::uint32_t a : update_[j]) {
      for (std::uint32_t c : children_[a]) {
        if (c < j) remainder_[j].push_back(c);
      }
    }
    std::sort(remainder_[j].begin(), remainder_[j].end());

    parity_[j] = remainder_[j];
    parity_[j].insert(parity_[j].end(), children_[j].begin(),
                      children_[j].end());
    std::sort(parity_[j].begin(), parity_[j].end());
  }
}

}  // namespace f2q
