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
#include <vector>

#include "f2q/dense.hpp"
#include "f2q/fenwick.hpp"
#include "f2q/fermion_op.hpp"
#include "f2q/mode_graph.hpp"
#include "f2q/pauli.hpp"

namespace f2q {

/// Jordan-Wigner ladder operator: raising/lowering on qubit j with a Z
/// chain on qubits 1..j-1.
PauliOperator jordan_wigner_ladder(std::uint32_t modes, std::uint32_t mode,
                                   bool dagger);

/// Jordan-Wigner transform onto M qubits. The spectrum equals the Fock
/// spectrum of H.
PauliOperator jordan_wigner(const FermionOperator& H);

PauliOperator bravyi_kitaev_ladder(const FenwickTree& tree,
                                   std::uint32_t mode, bool dagger);

/// Bravyi-Kitaev (binary indexed tree) transform onto M qubits.
PauliOperator bravyi_kitaev(const FermionOperator& H);

/// Pauli forms of the vertex and edge operators of an interaction graph.
/// B_i is Z on every edge qubit incident to vertex i. A_ij is the edge
/// orientation sign times X on edge qubit {i,j}, Z on every edge qubit
/// {l,i} with neighbor l < j, and Z on every edge qubit {s,j} with
/// neighbor s < i.
class EdgeOperators {
 public:
  explicit EdgeOperators(const ModeGraph& g);

  std::uint32_t qubits() const { return graph_->edge_count(); }
  const ModeGraph& graph() const { return *graph_; }

  /// B_i for a 1-based vertex.
  PauliOperator vertex_operator(std::uint32_t i) const;

  /// A_ij for an oriented edge; A_ji = -A_ij.
  PauliOperator edge_operator(std::uint32_t i, std::uint32_t j) const;

 private:
  const ModeGraph* graph_;
};

EdgeOperators edge_operators(const ModeGraph& g);

/// Superfast transform of H over its interaction graph (one qubit per
/// edge). Every term must classify into a supported even-parity pattern
/// and g must be the graph of H.
PauliOperator bksf_transform(const FermionOperator& H, const ModeGraph& g);

/// Closed cycle: vertices in traversal order plus the edge qubits of the
/// consecutive (cyclically closed) pairs.
struct Loop {
  std::vector<std::uint32_t> vertices;
  std::vector<std::uint32_t> edge_qubits;
};

/// Fundamental cycles of a deterministic spanning tree (breadth-first from
/// vertex 1, neighbors in ascending order). Exactly E - M + 1 loops for a
/// connected graph. Each loop starts at its smallest vertex and proceeds
/// toward the smaller-indexed of that vertex's two loop neighbors.
std::vector<Loop> cycle_basis(const ModeGraph& g);

/// Stabilizer of a loop: i^p A_{v1 v2} A_{v2 v3} ... A_{vp v1}. A single
/// Pauli term with coefficient +1 or -1 that squares to the identity and
/// commutes with every edge operator.
PauliOperator loop_stabilizer(const ModeGraph& g, const Loop& loop);

struct StabilizerSet {
  std::vector<Loop> loops;
  std::vector<PauliOperator> operators;
};

StabilizerSet build_stabilizers(const ModeGraph& g);

/// Projector onto the joint +1 eigenspace of the stabilizers, built as the
/// product of (1 + C_L)/2 factors. Dense; requires E <= 12.
DenseMatrix code_space_projector(const StabilizerSet& stabs,
                                 std::uint32_t qubits);

/// Normalized projection of a computational basis state (default all
/// zeros) onto the code space. Throws NumericError when the projection
/// annihilates the seed; callers may retry with another basis state.
StateVector vacuum_state(const ModeGraph& g, const StabilizerSet& stabs,
                         std::uint64_t seed_basis_state = 0);

/// Renders a stabilizer set: one Pauli term per line.
void dump_stabilizers(std::ostream& out, const StabilizerSet& stabs);

}  // namespace f2q
