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
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

#include "f2q/fermion_op.hpp"

namespace f2q {

/// Interaction graph: one vertex per mode (1-based), one qubit per edge.
/// Edges are stored as (i, j) with i < j, sorted lexicographically; the
/// edge qubit label is the 1-based position in that order. Orientation is
/// epsilon(i, j) = +1 for i < j and -1 for j < i.
class ModeGraph {
 public:
  ModeGraph(std::uint32_t vertices,
            std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

  std::uint32_t vertex_count() const { return vertices_; }
  std::uint32_t edge_count() const {
    return static_cast<std::uint32_t>(edges_.size());
  }

  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges() const {
    return edges_;
  }

  bool has_edge(std::uint32_t i, std::uint32_t j) const;

  /// 1-based qubit label of edge {i, j}; throws when the edge is absent.
  std::uint32_t edge_qubit(std::uint32_t i, std::uint32_t j) const;

  double orientation(std::uint32_t i, std::uint32_t j) const;

  /// Neighbors of v in ascending order.
  const std::vector<std::uint32_t>& neighbors(std::uint32_t v) const;

  bool connected() const;

  /// Text dump, one line per edge: "edge <i> <j> qubit <q>".
  void dump(std::ostream& out) const;

 private:
  std::uint32_t vertices_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> qubit_of_;
  std::vector<std::vector<std::uint32_t>> adjacency_;
};

/// Builds the interaction graph of a classified Hamiltonian. Excitation
/// terms add their (i, j) edge, number-excitation terms add (i, k), double
/// excitations add (i, j) and (k, l), pair creations add (i, j); number and
/// Coulomb/exchange terms add none. Unsupported terms are an error.
ModeGraph build_mode_graph(const FermionOperator& H);

}  // namespace f2q
