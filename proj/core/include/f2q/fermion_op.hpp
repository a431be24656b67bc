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
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "f2q/errors.hpp"

namespace f2q {

/// Creation (dagger) or annihilation operator on a 1-based mode index.
struct LadderOp {
  std::uint32_t mode;
  bool dagger;

  auto operator<=>(const LadderOp&) const = default;
};

/// One product of ladder operators with a real coefficient. Factor order is
/// preserved as written; ladder operators do not commute.
struct FermionTerm {
  double coefficient = 0.0;
  std::vector<LadderOp> factors;
};

std::string render_factors(const std::vector<LadderOp>& factors);

/// Real-weighted sum of ladder-operator products on M modes. Identical
/// factor sequences are merged by summing coefficients.
class FermionOperator {
 public:
  explicit FermionOperator(std::uint32_t modes);

  std::uint32_t modes() const { return modes_; }
  std::size_t size() const { return terms_.size(); }

  void add(const FermionTerm& term);

  double coefficient(const std::vector<LadderOp>& factors) const;

  /// Terms in deterministic (factor-sequence lexicographic) order.
  std::vector<FermionTerm> terms() const;

  /// Formal adjoint: factors reversed, daggers flipped, real coefficients
  /// unchanged.
  FermionOperator adjoint() const;

  /// Term-level Hermiticity: the canonical forms of the operator and its
  /// formal adjoint agree within tol on every coefficient.
  bool is_hermitian(double tol = 1e-12) const;

 private:
  std::uint32_t modes_;
  std::map<std::vector<LadderOp>, double> terms_;
};

enum class OperatorClass {
  Number,
  CoulombExchange,
  Excitation,
  NumberExcitation,
  DoubleExcitation,
  PairCreation,
  Unsupported,
};

std::string to_string(OperatorClass c);

struct TermClass {
  OperatorClass tag = OperatorClass::Unsupported;
  bool odd_parity = false;
};

/// Classifies a term (with its Hermitian-conjugate partner, when the
/// pattern requires one) against the supported operator patterns:
///
///   a+_i a_i                      Number
///   a+_i a+_j a_j a_i             Coulomb/exchange
///   a+_i a_j        (+ partner a+_j a_i)             Excitation
///   a+_i a+_j a_j a_k (+ partner a+_k a+_j a_j a_i)  NumberExcitation
///   a+_i a+_j a_k a_l (+ partner a+_l a+_k a_j a_i)  DoubleExcitation
///   a+_i a+_j       (+ partner a_i a_j)              PairCreation
///
/// Anything else is Unsupported; odd ladder-operator counts additionally
/// set the odd_parity flag.
TermClass classify_term(const FermionTerm& t,
                        const FermionTerm* partner = nullptr);

/// A classified term or term-pair with the mode indices of its pattern.
struct Interaction {
  OperatorClass cls = OperatorClass::Unsupported;
  double coefficient = 0.0;
  std::array<std::uint32_t, 4> modes = {0, 0, 0, 0};  // i, j, k, l as used
  bool odd_parity = false;
  std::string description;  // rendered factors, for diagnostics
};

struct ClassifiedOperator {
  double constant = 0.0;  // coefficient of the empty factor sequence
  std::vector<Interaction> interactions;
};

/// Pairs Hermitian-conjugate terms and classifies every term of H. Entries
/// that match no supported pattern come back as Unsupported; callers that
/// cannot represent them raise the error.
ClassifiedOperator classify_operator(const FermionOperator& H);

}  // namespace f2q
