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

#pragma once

#include <cstdint>
#include <vector>

namespace f2q {

/// Binary indexed tree over nodes 0..M-1, built by recursive bisection with
/// the root at M-1. Node j stores the occupation parity of its subtree.
/// Indices here are 0-based; this is the one internal structure that works
/// in 0-based coordinates (callers convert from 1-based modes).
class FenwickTree {
 public:
  explicit FenwickTree(std::uint32_t modes);

  std::uint32_t modes() const { return modes_; }
  int parent(std::uint32_t j) const { return parent_[j]; }

  /// Ancestors of j: the nodes whose stored sums contain mode j.
  const std::vector<std::uint32_t>& update_set(std::uint32_t j) const {
    return update_[j];
  }
  /// Direct children of j (the flip set).
  const std::vector<std::uint32_t>& children_set(std::uint32_t j) const {
    return children_[j];
  }
  /// Children of ancestors of j with index below j.
  const std::vector<std::uint32_t>& remainder_set(std::uint32_t j) const {
    return remainder_[j];
  }
  /// remainder_set union children_set: the nodes whose stored parities sum
  /// to the occupation parity of modes 0..j-1.
  const std::vector<std::uint32_t>& parity_set(std::uint32_t j) const {
    return parity_[j];
  }

 private:
  std::uint32_t modes_;
  std::vector<int> parent_;
  std::vector<std::vector<std::uint32_t>> children_;
  std::vector<std::vector<std::uint32_t>> update_;
  std::vector<std::vector<std::uint32_t>> remainder_;
  std::vector<std::vector<std::uint32_t>> parity_;
};

}  // namespace f2q
