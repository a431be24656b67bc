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

#include <Eigen/Dense>
#include <complex>

#include "f2q/pauli.hpp"

namespace f2q {

using DenseMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

/// Dense construction is capped at 12 qubits (4096-dimensional).
inline constexpr std::uint32_t kMaxDenseQubits = 12;

/// Dense matrix of a single Pauli string under the little-endian basis
/// convention (qubit 1 = least significant bit).
DenseMatrix string_matrix(const PauliString& s);

/// Sum of coefficient-weighted string matrices.
DenseMatrix to_dense_matrix(const PauliOperator& op);

/// Applies coefficient * string to a state without building the matrix.
StateVector apply_term(const PauliTerm& term, const StateVector& v);

struct GroundState {
  double energy;      // Hartree
  StateVector state;  // full-space vector (embedded when projected)
};

/// Minimum eigenvalue and eigenvector of a Hermitian operator. With a
/// projector (Hermitian idempotent), the operator is restricted to the
/// projector's +1 range first and the returned state is embedded back into
/// the full space.
GroundState ground_state(const PauliOperator& op,
                         const DenseMatrix* projector = nullptr);

/// exp(-i H t) from the eigendecomposition of a Hermitian operator.
DenseMatrix exact_evolution(const PauliOperator& op, double t);
DenseMatrix exact_evolution_dense(const DenseMatrix& h, double t);

/// Orthonormal basis (columns) of the +1 range of a Hermitian idempotent
/// projector. Throws NumericError when the range is zero-dimensional.
DenseMatrix orthonormal_range(const DenseMatrix& projector);

/// Max-norm Hermiticity defect check helper.
bool is_hermitian_dense(const DenseMatrix& m, double tol = 1e-9);

}  // namespace f2q
