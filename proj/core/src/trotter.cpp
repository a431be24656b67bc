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

#include "f2q/trotter.hpp"

#include <array>
#include <cmath>

namespace f2q {

namespace {

std::uint32_t plan_qubits(const TrotterPlan& plan) {
  if (plan.terms.empty()) {
    throw ValidationError("Trotter plan has no terms");
  }
  return plan.terms.front().string.qubits();
}

void validate(const TrotterPlan& plan) {
  if (plan.order < 1 || plan.order > 4) {
    throw ValidationError("Trotter order must be 1..4, got " +
                          std::to_string(plan.order));
  }
  if (plan.steps < 1) {
    throw ValidationError("Trotter steps must be >= 1");
  }
  if (plan.order >= 3 && !plan.has_bipartition) {
    throw ValidationError(
        "orders 3 and 4 need the (Z-only, remainder) bipartition; build "
        "the plan with make_trotter_plan");
  }
  for (const auto& t : plan.terms) {
    if (std::abs(t.coefficient.imag()) > 1e-12) {
      throw ValidationError("Trotter terms must have real coefficients");
    }
  }
}

// exp(-i c P theta) = cos(c theta) I - i sin(c theta) P.
DenseMatrix term_exponential(const DenseMatrix& identity,
                             const DenseMatrix& string_dense, double coeff,
                             double theta) {
  const double a = coeff * theta;
  return std::cos(a) * identity -
         std::complex<double>(0.0, std::sin(a)) * string_dense;
}

DenseMatrix matrix_power(DenseMatrix base, int n) {
  DenseMatrix result = DenseMatrix::Identity(base.rows(), base.cols());
  while (n > 0) {
    if (n & 1) result = base * result;
    base = base * base;
    n >>= 1;
  }
  return result;
}

DenseMatrix operand_sum(const std::vector<PauliTerm>& terms,
                        std::uint32_t qubits) {
  const Eigen::Index dim = 1ll << qubits;
  DenseMatrix sum = DenseMatrix::Zero(dim, dim);
  for (const auto& t : terms) {
    sum += t.coefficient.real() * string_matrix(t.string);
  }
  return sum;
}

}  // namespace

std::array<double, 5> fourth_order_coefficients() {
  const double p1 = 1.0 / (4.0 - std::pow(4.0, 1.0 / 3.0));
  return {p1, p1, 1.0 - 4.0 * p1, p1, p1};
}

TrotterPlan make_trotter_plan(std::vector<PauliTerm> ordered_terms,
                              double constant, int order, int steps,
                              double time) {
  TrotterPlan plan;
  plan.terms = std::move(ordered_terms);
  plan.constant = constant;
  plan.order = order;
  plan.steps = steps;
  plan.time = time;
  for (const auto& t : plan.terms) {
    if (t.string.x_mask() == 0) {
      plan.z_terms.push_back(t);
    } else {
      plan.xy_terms.push_back(t);
    }
  }
  plan.has_bipartition = true;
  validate(plan);
  return plan;
}

DenseMatrix trotter_evolution(const TrotterPlan& plan) {
  validate(plan);
  const std::uint32_t qubits = plan_qubits(plan);
  if (qubits > kMaxDenseQubits) {
    throw ValidationError("Trotter evolution capped at 12 qubits");
  }
  const Eigen::Index dim = 1ll << qubits;
  const DenseMatrix identity = DenseMatrix::Identity(dim, dim);
  const double dt = plan.time / plan.steps;

  DenseMatrix step = identity;
  if (plan.order <= 2) {
    std::vector<DenseMatrix> dense;
    dense.reserve(plan.terms.size());
    for (const auto& t : plan.terms) dense.push_back(string_matrix(t.string));

    if (plan.order == 1) {
      for (std::size_t k = 0; k < plan.terms.size(); ++k) {
        step = term_exponential(identity, dense[k],
                                plan.terms[k].coefficient.real(), dt) *
               step;
      }
    } else {
      for (std::size_t k = 0; k < plan.terms.size(); ++k) {
        step = term_exponential(identity, dense[k],
                                plan.terms[k].coefficient.real(), dt / 2) *
               step;
      }
      for (std::size_t k = plan.terms.size(); k-- > 0;) {
        step = term_exponential(identity, dense[k],
                                plan.terms[k].coefficient.real(), dt / 2) *
               step;
      }
    }
  } else {
    const DenseMatrix a = operand_sum(plan.z_terms, qubits);
    const DenseMatrix s = operand_sum(plan.xy_terms, qubits);
    auto ea = [&](double frac) { return exact_evolution_dense(a, frac * dt); };
    auto es = [&](double frac) { return exact_evolution_dense(s, frac * dt); };

    if (plan.order == 3) {
      step = ea(7.0 / 24.0) * es(2.0 / 3.0) * ea(3.0 / 4.0) *
             es(-2.0 / 3.0) * ea(-1.0 / 24.0) * es(1.0);
    } else {
      const auto p = fourth_order_coefficients();
      step = identity;
      for (double pi : p) {
        step = step * ea(pi / 2.0) * es(pi) * ea(pi / 2.0);
      }
    }
  }

  DenseMatrix result = matrix_power(step, plan.steps);
  const std::complex<double> phase =
      std::exp(std::complex<double>(0.0, -plan.constant * plan.time));
  return phase * result;
}

double trotter_energy(const DenseMatrix& U, double t,
                      const StateVector& reference_ground) {
  if (t <= 0) {
    throw ValidationError("evolution time must be positive");
  }
  if (U.rows() != U.cols() || U.rows() != reference_ground.size()) {
    throw ValidationError("unitary and reference state dimensions differ");
  }
  if ((U.adjoint() * U - DenseMatrix::Identity(U.rows(), U.cols()))
          .cwiseAbs()
          .maxCoeff() > 1e-8) {
    throw NumericError("trotter_energy requires a unitary matrix");
  }
  Eigen::ComplexEigenSolver<DenseMatrix> solver(U);
  if (solver.info() != Eigen::Success) {
    throw NumericError("eigendecomposition of the evolution unitary failed");
  }
  double best = -1.0;
  double second = -1.0;
  Eigen::Index best_k = 0;
  for (Eigen::Index k = 0; k < U.rows(); ++k) {
    const double overlap =
        std::abs(solver.eigenvectors().col(k).dot(reference_ground));
    if (overlap > best) {
      second = best;
      best = overlap;
      best_k = k;
    } else if (overlap > second) {
      second = overlap;
    }
  }
  if (best - second < 1e-9) {
    throw NumericError(
        "ambiguous ground-state identification: two eigenvectors have the "
        "same maximal overlap with the reference state");
  }
  return -std::arg(solver.eigenvalues()(best_k)) / t;
}

}  // namespace f2q
