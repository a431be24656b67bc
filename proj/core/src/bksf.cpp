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

#include <cmath>

#include "f2q/transforms.hpp"

namespace f2q {

EdgeOperators::EdgeOperators(const ModeGraph& g) : graph_(&g) {
  if (!g.connected()) {
    throw ValidationError("edge operators require a connected graph");
  }
}

EdgeOperators edge_operators(const ModeGraph& g) { return EdgeOperators(g); }

PauliOperator EdgeOperators::vertex_operator(std::uint32_t i) const {
  PauliString s(graph_->edge_count());
  for (auto n : graph_->neighbors(i)) {
    s.set(graph_->edge_qubit(i, n), Pauli::Z);
  }
  return PauliOperator::single_term(1.0, s);
}

PauliOperator EdgeOperators::edge_operator(std::uint32_t i,
                                           std::uint32_t j) const {
  const double eps = graph_->orientation(i, j);
  PauliString s(graph_->edge_count());
  for (auto l : graph_->neighbors(i)) {
    if (l < j) s.set(graph_->edge_qubit(l, i), Pauli::Z);
  }
  for (auto t : graph_->neighbors(j)) {
    if (t < i) s.set(graph_->edge_qubit(t, j), Pauli::Z);
  }
  s.set(graph_->edge_qubit(i, j), Pauli::X);
  return PauliOperator::single_term(eps, s);
}

namespace {

class BksfBuilder {
 public:
  explicit BksfBuilder(const ModeGraph& g)
      : ops_(g), one_(PauliOperator::identity(g.edge_count())) {}

  PauliOperator number(std::uint32_t i) const {
    // a+_i a_i = (1 - B_i)/2
    return 0.5 * (one_ - ops_.vertex_operator(i));
  }

  PauliOperator coulomb_exchange(std::uint32_t i, std::uint32_t j) const {
    return number(i) * number(j);
  }

  PauliOperator excitation(std::uint32_t i, std::uint32_t j) const {
    // a+_i a_j + a+_j a_i = (-i/2)(A_ij B_j + B_i A_ij)
    const auto a = ops_.edge_operator(i, j);
    const std::complex<double> half_mi(0.0, -0.5);
    return half_mi * (a * ops_.vertex_operator(j) +
                      ops_.vertex_operator(i) * a);
  }

  PauliOperator number_excitation(std::uint32_t i, std::uint32_t j,
                                  std::uint32_t k) const {
    // a+_i a+_j a_j a_k + a+_k a+_j a_j a_i
    //   = (-i/2)(A_ik B_k + B_i A_ik) (1 - B_j)/2
    return excitation(i, k) *
           (0.5 * (one_ - ops_.vertex_operator(j)));
  }

  PauliOperator double_excitation(std::uint32_t i, std::uint32_t j,
                                  std::uint32_t k, std::uint32_t l) const {
    const auto a2 = ops_.edge_operator(i, j) * ops_.edge_operator(k, l);
    const auto bi = ops_.vertex_operator(i);
    const auto bj = ops_.vertex_operator(j);
    const auto bk = ops_.vertex_operator(k);
    const auto bl = ops_.vertex_operator(l);
    PauliOperator inner = -1.0 * one_;
    inner -= bi * bj;
    inner += bi * bk;
    inner += bi * bl;
    inner += bj * bk;
    inner += bj * bl;
    inner -= bk * bl;
    inner += bi * bj * bk * bl;
    return 0.125 * (a2 * inner);
  }

  PauliOperator pair_creation(std::uint32_t i, std::uint32_t j) const {
    // a+_i a+_j + a_i a_j = (-i/2)(A_ij B_j - B_i A_ij)
    const auto a = ops_.edge_operator(i, j);
    const std::complex<double> half_mi(0.0, -0.5);
    return half_mi * (a * ops_.vertex_operator(j) -
                      ops_.vertex_operator(i) * a);
  }

  const PauliOperator& one() const { return one_; }

 private:
  EdgeOperators ops_;
  PauliOperator one_;
};

}  // namespace

PauliOperator bksf_transform(const FermionOperator& H, const ModeGraph& g) {
  const BksfBuilder builder(g);
  const ClassifiedOperator classified = classify_operator(H);

  PauliOperator out(g.edge_count());
  if (classified.constant != 0.0) {
    out += classified.constant * builder.one();
  }
  for (const auto& rec : classified.interactions) {
    const auto [i, j, k, l] = rec.modes;
    switch (rec.cls) {
      case OperatorClass::Number:
        out += rec.coefficient * builder.number(i);
        break;
      case OperatorClass::CoulombExchange:
        out += rec.coefficient * builder.coulomb_exchange(i, j);
        break;
      case OperatorClass::Excitation:
        out += rec.coefficient * builder.excitation(i, j);
        break;
      case OperatorClass::NumberExcitation:
        out += rec.coefficient * builder.number_excitation(i, j, k);
        break;
      case OperatorClass::DoubleExcitation:
        out += rec.coefficient * builder.double_excitation(i, j, k, l);
        break;
      case OperatorClass::PairCreation:
        out += rec.coefficient * builder.pair_creation(i, j);
        break;
      case OperatorClass::Unsupported:
        throw ValidationError(
            "term '" + rec.description +
            "' cannot be represented in the superfast encoding" +
            (rec.odd_parity ? " (odd ladder-operator count)" : ""));
    }
  }
  out = canonicalize(out);
  for (const auto& [s, c] : out.term_map()) {
    if (std::abs(c.imag()) > 1e-9) {
      throw NumericError("superfast transform produced a complex "
                         "coefficient on " + s.letters());
    }
  }
  return out;
}

}  // namespace f2q
