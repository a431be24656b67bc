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

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "f2q/errors.hpp"

namespace f2q {

/// Coefficients with magnitude at or below this are dropped when an
/// operator is canonicalized.
inline constexpr double kDropTolerance = 1e-12;

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

/// Dense n-qubit Pauli string.
///
/// Qubits are 1-based; qubit k lives at bit position k-1, making qubit 1
/// the least significant bit of computational basis labels (little-endian
/// basis ordering). Text renderings list letters from qubit n down to
/// qubit 1, so "ZXXZ" on four qubits is Z on qubit 4 and Z on qubit 1.
class PauliString {
 public:
  explicit PauliString(std::uint32_t qubits);

  /// Parses a descending-index letter string, e.g. "ZXXZ".
  static PauliString from_letters(const std::string& letters);

  std::uint32_t qubits() const { return qubits_; }
  Pauli at(std::uint32_t qubit) const;
  void set(std::uint32_t qubit, Pauli p);

  bool is_identity() const { return (x_ | z_) == 0; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }

  /// Letters from qubit n down to qubit 1.
  std::string letters() const;

  bool operator==(const PauliString& other) const {
    return qubits_ == other.qubits_ && x_ == other.x_ && z_ == other.z_;
  }
  /// Lexicographic on the rendered letter string (I < X < Y < Z), which is
  /// the deterministic term order used for serialization.
  bool operator<(const PauliString& other) const;

 private:
  std::uint32_t qubits_;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

struct StringProduct {
  std::complex<double> phase;  // one of 1, i, -1, -i (exact)
  PauliString string;
};

/// Exact product of two strings: phase * string equals the matrix product
/// a * b.
StringProduct multiply_strings(const PauliString& a, const PauliString& b);

/// True iff the strings commute (even number of positions where the letters
/// differ and neither is I).
bool commutes(const PauliString& a, const PauliString& b);

struct WeightProfile {
  std::uint32_t weight;  // non-identity letters
  std::uint32_t non_z;   // X or Y letters
};

WeightProfile weight_profile(const PauliString& s);

struct PauliTerm {
  std::complex<double> coefficient;
  PauliString string;
};

/// Complex-weighted sum of canonical Pauli strings on a fixed qubit count.
/// Terms are kept merged and in deterministic (lexicographic) order.
class PauliOperator {
 public:
  explicit PauliOperator(std::uint32_t qubits);

  static PauliOperator identity(std::uint32_t qubits,
                                std::complex<double> coefficient = 1.0);
  static PauliOperator single_term(std::complex<double> coefficient,
                                   const PauliString& s);

  std::uint32_t qubits() const { return qubits_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  void add(const PauliString& s, std::complex<double> coefficient);

  /// Coefficient of a string, or zero when absent.
  std::complex<double> coefficient(const PauliString& s) const;

  std::vector<PauliTerm> terms() const;

  const std::map<PauliString, std::complex<double>>& term_map() const {
    return terms_;
  }

  PauliOperator& operator+=(const PauliOperator& other);
  PauliOperator& operator-=(const PauliOperator& other);
  PauliOperator& operator*=(std::complex<double> scalar);

  bool is_hermitian(double tol = 1e-9) const;

 private:
  std::uint32_t qubits_;
  std::map<PauliString, std::complex<double>> terms_;
};

PauliOperator operator+(PauliOperator a, const PauliOperator& b);
PauliOperator operator-(PauliOperator a, const PauliOperator& b);
PauliOperator operator*(const PauliOperator& a, const PauliOperator& b);
PauliOperator operator*(std::complex<double> scalar, PauliOperator op);
PauliOperator operator*(PauliOperator op, std::complex<double> scalar);

/// Merges like terms and removes terms with |coefficient| <= tol.
PauliOperator canonicalize(const PauliOperator& op,
                           double tol = kDropTolerance);

/// Renders one term as "<coeff> <letters>". Real coefficients print as a
/// plain decimal; complex ones as re+imi.
std::string render_term(const PauliTerm& term, int precision = 6);

/// One term per line, deterministic order.
std::string render(const PauliOperator& op, int precision = 6);

}  // namespace f2q
