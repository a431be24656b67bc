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
#include "f2q/pauli.hpp"

namespace f2q {

/// Gate alphabet: H, RX(+-pi/2), RZ(theta), CNOT. Qubits are 1-based.
/// RX(theta) = exp(-i theta X / 2), RZ(theta) = exp(-i theta Z / 2).
struct Gate {
  enum class Kind { H, RX, RZ, CNOT };

  Kind kind;
  std::uint32_t q0;       // target (H/RX/RZ) or control (CNOT)
  std::uint32_t q1 = 0;   // CNOT target
  double angle = 0.0;     // RX/RZ only

  static Gate h(std::uint32_t q) { return {Kind::H, q}; }
  static Gate rx(std::uint32_t q, double angle) {
    return {Kind::RX, q, 0, angle};
  }
  static Gate rz(std::uint32_t q, double angle) {
    return {Kind::RZ, q, 0, angle};
  }
  static Gate cnot(std::uint32_t control, std::uint32_t target) {
    return {Kind::CNOT, control, target};
  }
};

struct Circuit {
  std::uint32_t qubits = 0;
  std::vector<Gate> gates;
};

/// Lowers exp(-i coeff scale P) to gates: basis changes (H per X, RX(pi/2)
/// per Y), a CNOT ladder from the lowest involved qubit onto the highest,
/// RZ(2 coeff scale) there, then the mirrored ladder and basis undo. An
/// identity string compiles to the empty circuit (a global phase).
Circuit compile_pauli_rotation(const PauliTerm& term, double scale);

struct GateProfile {
  std::uint64_t h = 0;
  std::uint64_t rx = 0;
  std::uint64_t rz = 0;
  std::uint64_t cnot = 0;

  std::uint64_t total() const { return h + rx + rz + cnot; }
};

/// Single-Trotter-step gate totals: per non-identity term,
/// 2*non_z + 2*(weight - 1) + 1 gates; the identity term contributes none.
GateProfile gate_count(const PauliOperator& H);

/// Dense unitary of a circuit (gates applied in list order).
DenseMatrix circuit_matrix(const Circuit& c);

/// Text form: header "qubits <n>", then one gate per line ("H 2",
/// "RX 2 +pi/2", "RZ 3 <angle>", "CNOT 1 2").
void emit_circuit(std::ostream& out, const Circuit& c);

}  // namespace f2q
