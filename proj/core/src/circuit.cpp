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

#include "f2q/circuit.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

namespace f2q {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void apply_single_qubit(DenseMatrix& u, std::uint32_t qubit,
                        const Eigen::Matrix2cd& g) {
  const std::uint64_t dim = static_cast<std::uint64_t>(u.rows());
  const std::uint64_t bit = 1ull << (qubit - 1);
  for (std::uint64_t col = 0; col < dim; ++col) {
    for (std::uint64_t row = 0; row < dim; ++row) {
      if (row & bit) continue;
      const auto r0 = static_cast<Eigen::Index>(row);
      const auto r1 = static_cast<Eigen::Index>(row | bit);
      const auto c = static_cast<Eigen::Index>(col);
      const std::complex<double> a = u(r0, c);
      const std::complex<double> b = u(r1, c);
      u(r0, c) = g(0, 0) * a + g(0, 1) * b;
      u(r1, c) = g(1, 0) * a + g(1, 1) * b;
    }
  }
}

void apply_cnot(DenseMatrix& u, std::uint32_t control, std::uint32_t target) {
  const std::uint64_t dim = static_cast<std::uint64_t>(u.rows());
  const std::uint64_t cbit = 1ull << (control - 1);
  const std::uint64_t tbit = 1ull << (target - 1);
  for (std::uint64_t col = 0; col < dim; ++col) {
    for (std::uint64_t row = 0; row < dim; ++row) {
      if ((row & cbit) && !(row & tbit)) {
        std::swap(u(static_cast<Eigen::Index>(row),
                    static_cast<Eigen::Index>(col)),
                  u(static_cast<Eigen::Index>(row | tbit),
                    static_cast<Eigen::Index>(col)));
      }
    }
  }
}

Eigen::Matrix2cd gate_matrix_2x2(const Gate& g) {
  Eigen::Matrix2cd m;
  const std::complex<double> i(0.0, 1.0);
  switch (g.kind) {
    case Gate::Kind::H:
      m << 1, 1, 1, -1;
      return m / std::sqrt(2.0);
    case Gate::Kind::RX:
      m << std::cos(g.angle / 2), -i * std::sin(g.angle / 2),
          -i * std::sin(g.angle / 2), std::cos(g.angle / 2);
      return m;
    case Gate::Kind::RZ:
      m << std::exp(-i * (g.angle / 2)), 0, 0, std::exp(i * (g.angle / 2));
      return m;
    case Gate::Kind::CNOT:
      break;
  }
  throw ValidationError("not a single-qubit gate");
}

void validate_gate(const Gate& g, std::uint32_t qubits) {
  if (g.q0 < 1 || g.q0 > qubits) {
    throw ValidationError("gate operand out of range");
  }
  if (g.kind == Gate::Kind::CNOT) {
    if (g.q1 < 1 || g.q1 > qubits) {
      throw ValidationError("gate operand out of range");
    }
    if (g.q0 == g.q1) {
      throw ValidationError("CNOT control equals target");
    }
  } else if (!std::isfinite(g.angle)) {
    throw ValidationError("gate angle must be finite");
  }
}

}  // namespace

Circuit compile_pauli_rotation(const PauliTerm& term, double scale) {
  if (std::abs(term.coefficient.imag()) > 1e-12) {
    throw ValidationError(
        "cannot compile a rotation with a complex coefficient");
  }
  const auto& s = term.string;
  Circuit c;
  c.qubits = s.qubits();

  std::vector<std::uint32_t> involved;
  for (std::uint32_t q = 1; q <= s.qubits(); ++q) {
    if (s.at(q) != Pauli::I) involved.push_back(q);
  }
  if (involved.empty()) return c;  // global phase only

  for (auto q : involved) {
    if (s.at(q) == Pauli::X) c.gates.push_back(Gate::h(q));
    if (s.at(q) == Pauli::Y) c.gates.push_back(Gate::rx(q, kHalfPi));
  }
  for (std::size_t k = 0; k + 1 < involved.size(); ++k) {
    c.gates.push_back(Gate::cnot(involved[k], involved[k + 1]));
  }
  c.gates.push_back(
      Gate::rz(involved.back(), 2.0 * term.coefficient.real() * scale));
  for (std::size_t k = involved.size() - 1; k-- > 0;) {
    c.gates.push_back(Gate::cnot(involved[k], involved[k + 1]));
  }
  for (auto it = involved.rbegin(); it != involved.rend(); ++it) {
    if (s.at(*it) == Pauli::X) c.gates.push_back(Gate::h(*it));
    if (s.at(*it) == Pauli::Y) c.gates.push_back(Gate::rx(*it, -kHalfPi));
  }
  return c;
}

GateProfile gate_count(const PauliOperator& H) {
  GateProfile profile;
  for (const auto& [s, coeff] : H.term_map()) {
    const auto w = weight_profile(s);
    if (w.weight == 0) continue;
    const auto y_count =
        static_cast<std::uint64_t>(std::popcount(s.x_mask() & s.z_mask()));
    profile.h += 2 * (w.non_z - y_count);
    profile.rx += 2 * y_count;
    profile.cnot += 2 * (w.weight - 1);
    profile.rz += 1;
  }
  return profile;
}

DenseMatrix circuit_matrix(const Circuit& c) {
  if (c.qubits > kMaxDenseQubits) {
    throw ValidationError("circuit evaluation capped at 12 qubits");
  }
  const Eigen::Index dim = 1ll << c.qubits;
  DenseMatrix u = DenseMatrix::Identity(dim, dim);
  for (const auto& g : c.gates) {
    validate_gate(g, c.qubits);
    if (g.kind == Gate::Kind::CNOT) {
      apply_cnot(u, g.q0, g.q1);
    } else {
      apply_single_qubit(u, g.q0, gate_matrix_2x2(g));
    }
  }
  return u;
}

void emit_circuit(std::ostream& out, const Circuit& c) {
  out << "qubits " << c.qubits << '\n';
  for (const auto& g : c.gates) {
    switch (g.kind) {
      case Gate::Kind::H:
        out << "H " << g.q0 << '\n';
        break;
      case Gate::Kind::RX:
        out << "RX " << g.q0 << (g.angle > 0 ? " +pi/2" : " -pi/2") << '\n';
        break;
      case Gate::Kind::RZ: {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.12g", g.angle);
        out << "RZ " << g.q0 << ' ' << buf << '\n';
        break;
      }
      case Gate::Kind::CNOT:
        out << "CNOT " << g.q0 << ' ' << g.q1 << '\n';
        break;
    }
  }
}

}  // namespace f2q
