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

#include <array>
#include <vector>

#include "f2q/dense.hpp"
#include "f2q/pauli.hpp"

namespace f2q {

/// Product-formula approximation of exp(-i H t).
///
/// `terms` is the ordered non-identity term sequence; the first term acts
/// on the state first within each sweep. `constant` is the identity
/// coefficient, applied exactly as a global phase. Orders 3 and 4 use the
/// two-operand formulas over the (Z-only, remainder) bipartition, which
/// make_trotter_plan computes.
struct TrotterPlan {
  std::vector<PauliTerm> terms;
  double constant = 0.0;
  int order = 1;
  int steps = 1;
  double time = 1.0;

  bool has_bipartition = false;
  std::vector<PauliTerm> z_terms;   // operand A: Z-only strings
  std::vector<PauliTerm> xy_terms;  // operand S: everything else
};

TrotterPlan make_trotter_plan(std::vector<PauliTerm> ordered_terms,
                              double constant, int order, int steps,
                              double time);

/// Dense unitary of the plan. Order 1 is the plain per-term product, order
/// 2 the symmetrized forward/backward sweep, orders 3 and 4 the two-operand
/// product formulas with exactly exponentiated operands. The fourth-order
/// coefficients are p1 = p2 = p4 = p5 = 1/(4 - 4^(1/3)), p3 = 1 - 4 p1.
DenseMatrix trotter_evolution(const TrotterPlan& plan);

/// Fourth-order step coefficients (p1..p5).
std::array<double, 5> fourth_order_coefficients();

/// Energy extracted from an evolution unitary: eigendecompose U, pick the
/// eigenvector with the largest |overlap| with the reference ground state,
/// return -arg(eigenvalue)/t with arg in (-pi, pi]. A tie in the maximal
/// overlap within 1e-9 is an error.
double trotter_energy(const DenseMatrix& U, double t,
                      const StateVector& reference_ground);

}  // namespace f2q
