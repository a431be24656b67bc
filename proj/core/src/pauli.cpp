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

#include "f2q/pauli.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace f2q {

namespace {

constexpr std::uint32_t kMaxQubits = 64;

// Power of i picked up when multiplying single-qubit letters a*b,
// indexed [a][b] with I=0, X=1, Y=2, Z=3.
constexpr int kPhaseExp[4][4] = {
    {0, 0, 0, 0},
    {0, 0, 1, 3},
    {0, 3, 0, 1},
    {0, 1, 3, 0},
};

constexpr std::complex<double> kIPower[4] = {
    {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

void check_same_qubits(const PauliString& a, const PauliString& b) {
  if (a.qubits() != b.qubits()) {
    throw ValidationError("Pauli strings act on different qubit counts (" +
                          std::to_string(a.qubits()) + " vs " +
                          std::to_string(b.qubits()) + ")");
  }
}

int letter_code(const PauliString& s, std::uint32_t qubit) {
  return static_cast<int>(s.at(qubit));
}

}  // namespace

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  throw ValidationError("invalid Pauli letter");
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default:
      throw ParseError(std::string("invalid Pauli letter '") + c + "'");
  }
}

PauliString::PauliString(std::uint32_t qubits) : qubits_(qubits) {
  if (qubits > kMaxQubits) {
    throw ValidationError("qubit count " + std::to_string(qubits) +
                          " exceeds the supported maximum of 64");
  }
}

PauliString PauliString::from_letters(const std::string& letters) {
  PauliString s(static_cast<std::uint32_t>(letters.size()));
  for (std::size_t i = 0; i < letters.size(); ++i) {
    auto qubit = static_cast<std::uint32_t>(letters.size() - i);
    s.set(qubit, pauli_from_char(letters[i]));
  }
  return s;
}

Pauli PauliString::at(std::uint32_t qubit) const {
  if (qubit < 1 || qubit > qubits_) {
    throw ValidationError("qubit index " + std::to_string(qubit) +
                          " out of range 1.." + std::to_string(qubits_));
  }
  const std::uint64_t bit = 1ull << (qubit - 1);
  const bool x = (x_ & bit) != 0;
  const bool z = (z_ & bit) != 0;
  if (x && z) return Pauli::Y;
  if (x) return Pauli::X;
  if (z) return Pauli::Z;
  return Pauli::I;
}

void PauliString::set(std::uint32_t qubit, Pauli p) {
  if (qubit < 1 || qubit > qubits_) {
    throw ValidationError("qubit index " + std::to_string(qubit) +
                          " out of range 1.." + std::to_string(qubits_));
  }
  const std::uint64_t bit = 1ull << (qubit - 1);
  x_ &= ~bit;
  z_ &= ~bit;
  if (p == Pauli::X || p == Pauli::Y) x_ |= bit;
  if (p == Pauli::Z || p == Pauli::Y) z_ |= bit;
}

std::string PauliString::letters() const {
  std::string out(qubits_, 'I');
  for (std::uint32_t q = 1; q <= qubits_; ++q) {
    out[qubits_ - q] = pauli_char(at(q));
  }
  return out;
}

bool PauliString::operator<(const PauliString& other) const {
  if (qubits_ != other.qubits_) return qubits_ < other.qubits_;
  for (std::uint32_t q = qubits_; q >= 1; --q) {
    const int a = letter_code(*this, q);
    const int b = letter_code(other, q);
    if (a != b) return a < b;
  }
  return false;
}

StringProduct multiply_strings(const PauliString& a, const PauliString& b) {
  check_same_qubits(a, b);
  PauliString out(a.qubits());
  int exp = 0;
  std::uint64_t active = a.x_mask() | a.z_mask() | b.x_mask() | b.z_mask();
  while (active) {
    const int pos = std::countr_zero(active);
    active &= active - 1;
    const auto q = static_cast<std::uint32_t>(pos + 1);
    const int la = letter_code(a, q);
    const int lb = letter_code(b, q);
    exp = (exp + kPhaseExp[la][lb]) & 3;
  }
  // The product string itself is the XOR of the symplectic masks.
  for (std::uint32_t q = 1; q <= a.qubits(); ++q) {
    const std::uint64_t bit = 1ull << (q - 1);
    const bool x = ((a.x_mask() ^ b.x_mask()) & bit) != 0;
    const bool z = ((a.z_mask() ^ b.z_mask()) & bit) != 0;
    out.set(q, x && z ? Pauli::Y : x ? Pauli::X : z ? Pauli::Z : Pauli::I);
  }
  return {kIPower[exp], out};
}

bool commutes(const PauliString& a, const PauliString& b) {
  check_same_qubits(a, b);
  const int anticommuting =
      std::popcount(a.x_mask() & b.z_mask()) +
      std::popcount(a.z_mask() & b.x_mask());
  return (anticommuting & 1) == 0;
}

WeightProfile weight_profile(const PauliString& s) {
  return {static_cast<std::uint32_t>(std::popcount(s.x_mask() | s.z_mask())),
          static_cast<std::uint32_t>(std::popcount(s.x_mask()))};
}

PauliOperator::PauliOperator(std::uint32_t qubits) : qubits_(qubits) {
  if (qubits > kMaxQubits) {
    throw ValidationError("qubit count exceeds the supported maximum of 64");
  }
}

PauliOperator PauliOperator::identity(std::uint32_t qubits,
                                      std::complex<double> coefficient) {
  PauliOperator op(qubits);
  op.add(PauliString(qubits), coefficient);
  return op;
}

PauliOperator PauliOperator::single_term(std::complex<double> coefficient,
                                         const PauliString& s) {
  PauliOperator op(s.qubits());
  op.add(s, coefficient);
  return op;
}

void PauliOperator::add(const PauliString& s, std::complex<double> c) {
  if (s.qubits() != qubits_) {
    throw ValidationError("term qubit count does not match operator");
  }
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
  }
}

std::complex<double> PauliOperator::coefficient(const PauliString& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? std::complex<double>(0.0) : it->second;
}

std::vector<PauliTerm> PauliOperator::terms() const {
  std::vector<PauliTerm> out;
  out.reserve(terms_.size());
  for (const auto& [s, c] : terms_) out.push_back({c, s});
  return out;
}

PauliOperator& PauliOperator::operator+=(const PauliOperator& other) {
  if (other.qubits_ != qubits_) {
    throw ValidationError("operator qubit counts differ");
  }
  for (const auto& [s, c] : other.terms_) add(s, c);
  return *this;
}

PauliOperator& PauliOperator::operator-=(const PauliOperator& other) {
  if (other.qubits_ != qubits_) {
    throw ValidationError("operator qubit counts differ");
  }
  for (const auto& [s, c] : other.terms_) add(s, -c);
  return *this;
}

PauliOperator& PauliOperator::operator*=(std::complex<double> scalar) {
  for (auto& [s, c] : terms_) c *= scalar;
  return *this;
}

bool PauliOperator::is_hermitian(double tol) const {
  for (const auto& [s, c] : terms_) {
    if (std::abs(c.imag()) > tol) return false;
  }
  return true;
}

PauliOperator operator+(PauliOperator a, const PauliOperator& b) {
  a += b;
  return a;
}

PauliOperator operator-(PauliOperator a, const PauliOperator& b) {
  a -= b;
  return a;
}

PauliOperator operator*(const PauliOperator& a, const PauliOperator& b) {
  if (a.qubits() != b.qubits()) {
    throw ValidationError("operator qubit counts differ");
  }
  PauliOperator out(a.qubits());
  for (const auto& [sa, ca] : a.term_map()) {
    for (const auto& [sb, cb] : b.term_map()) {
      auto prod = multiply_strings(sa, sb);
      out.add(prod.string, ca * cb * prod.phase);
    }
  }
  return out;
}

PauliOperator operator*(std::complex<double> scalar, PauliOperator op) {
  op *= scalar;
  return op;
}

PauliOperator operator*(PauliOperator op, std::complex<double> scalar) {
  op *= scalar;
  return op;
}

PauliOperator canonicalize(const PauliOperator& op, double tol) {
  if (tol < 0) {
    throw ValidationError("canonicalization tolerance must be >= 0");
  }
  PauliOperator out(op.qubits());
  for (const auto& [s, c] : op.term_map()) {
    if (std::abs(c) > tol) out.add(s, c);
  }
  return out;
}

std::string render_term(const PauliTerm& term, int precision) {
  char buf[96];
  if (std::abs(term.coefficient.imag()) <= kDropTolerance) {
    std::snprintf(buf, sizeof(buf), "%.*f", precision,
                  term.coefficient.real());
  } else {
    std::snprintf(buf, sizeof(buf), "%.*f%+.*fi", precision,
                  term.coefficient.real(), precision,
                  term.coefficient.imag());
  }
  return std::string(buf) + " " + term.string.letters();
}

std::string render(const PauliOperator& op, int precision) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [s, c] : op.term_map()) {
    if (!first) out << '\n';
    first = false;
    out << render_term({c, s}, precision);
  }
  return out.str();
}

}  // namespace f2q
