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

#include "f2q/dense.hpp"

#include <bit>

namespace f2q {

namespace {

constexpr std::complex<double> kIPower[4] = {
    {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

void check_dense_cap(std::uint32_t qubits) {
  if (qubits > kMaxDenseQubits) {
    throw ValidationError("dense construction capped at " +
                          std::to_string(kMaxDenseQubits) + " qubits, got " +
                          std::to_string(qubits));
  }
}

// P|b> = i^{#Y} (-1)^{popcount(z & b)} |b ^ x>.
std::complex<double> basis_phase(const PauliString& s, std::uint64_t b) {
  const int y_count = std::popcount(s.x_mask() & s.z_mask());
  const int sign = std::popcount(s.z_mask() & b) & 1;
  std::complex<double> phase = kIPower[y_count & 3];
  return sign ? -phase : phase;
}

}  // namespace

DenseMatrix string_matrix(const PauliString& s) {
  check_dense_cap(s.qubits());
  const std::uint64_t dim = 1ull << s.qubits();
  DenseMatrix m = DenseMatrix::Zero(static_cast<Eigen::Index>(dim),
                                    static_cast<Eigen::Index>(dim));
  for (std::uint64_t b = 0; b < dim; ++b) {
    m(static_cast<Eigen::Index>(b ^ s.x_mask()),
      static_cast<Eigen::Index>(b)) = basis_phase(s, b);
  }
  return m;
}

DenseMatrix to_dense_matrix(const PauliOperator& op) {
  check_dense_cap(op.qubits());
  const std::uint64_t dim = 1ull << op.qubits();
  DenseMatrix m = DenseMatrix::Zero(static_cast<Eigen::Index>(dim),
                                    static_cast<Eigen::Index>(dim));
  for (const auto& [s, c] : op.term_map()) {
    for (std::uint64_t b = 0; b < dim; ++b) {
      m(static_cast<Eigen::Index>(b ^ s.x_mask()),
        static_cast<Eigen::Index>(b)) += c * basis_phase(s, b);
    }
  }
  return m;
}

StateVector apply_term(const PauliTerm& term, const StateVector& v) {
  const auto& s = term.string;
  if (v.size() != (1ll << s.qubits())) {
    throw ValidationError("state dimension does not match term qubit count");
  }
  StateVector out = StateVector::Zero(v.size());
  for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(v.size()); ++b) {
    out(static_cast<Eigen::Index>(b ^ s.x_mask())) +=
        term.coefficient * basis_phase(s, b) *
        v(static_cast<Eigen::Index>(b));
  }
  return out;
}

bool is_hermitian_dense(const DenseMatrix& m, double tol) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

DenseMatrix orthonormal_range(const DenseMatrix& projector) {
  if (!is_hermitian_dense(projector)) {
    throw ValidationError("projector is not Hermitian");
  }
  if ((projector * projector - projector).cwiseAbs().maxCoeff() > 1e-9) {
    throw ValidationError("projector is not idempotent");
  }
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(projector);
  const auto& evals = solver.eigenvalues();
  Eigen::Index dim = 0;
  for (Eigen::Index k = 0; k < evals.size(); ++k) {
    if (evals(k) > 0.5) ++dim;
  }
  if (dim == 0) {
    throw NumericError("projector range is zero-dimensional");
  }
  DenseMatrix basis(projector.rows(), dim);
  Eigen::Index col = 0;
  for (Eigen::Index k = 0; k < evals.size(); ++k) {
    if (evals(k) > 0.5) basis.col(col++) = solver.eigenvectors().col(k);
  }
  return basis;
}

GroundState ground_state(const PauliOperator& op,
                         const DenseMatrix* projector) {
  DenseMatrix h = to_dense_matrix(op);
  if (!is_hermitian_dense(h)) {
    throw NumericError("ground_state requires a Hermitian operator");
  }
  if (projector == nullptr) {
    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(h);
    return {solver.eigenvalues()(0), solver.eigenvectors().col(0)};
  }
  const DenseMatrix basis = orthonormal_range(*projector);
  const DenseMatrix restricted = basis.adjoint() * h * basis;
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(restricted);
  return {solver.eigenvalues()(0), basis * solver.eigenvectors().col(0)};
}

DenseMatrix exact_evolution_dense(const DenseMatrix& h, double t) {
  if (!is_hermitian_dense(h)) {
    throw NumericError("exact_evolution requires a Hermitian operator");
  }
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(h);
  const auto& evals = solver.eigenvalues();
  StateVector phases(evals.size());
  for (Eigen::Index k = 0; k < evals.size(); ++k) {
    phases(k) = std::exp(std::complex<double>(0.0, -evals(k) * t));
  }
  return solver.eigenvectors() * phases.asDiagonal() *
         solver.eigenvectors().adjoint();
}

DenseMatrix exact_evolution(const PauliOperator& op, double t) {
  return exact_evolution_dense(to_dense_matrix(op), t);
}

}  // namespace f2q
