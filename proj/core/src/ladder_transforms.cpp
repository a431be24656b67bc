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

#include "f2q/transforms.hpp"

#include <functional>

namespace f2q {

namespace {

// Shared by the JW and BK transforms: map every ladder factor through
// `ladder` and expand the products.
PauliOperator map_ladder_operators(
    const FermionOperator& H,
    const std::function<PauliOperator(std::uint32_t, bool)>& ladder) {
  PauliOperator out(H.modes());
  for (const auto& term : H.terms()) {
    PauliOperator product = PauliOperator::identity(H.modes(),
                                                    term.coefficient);
    for (const auto& f : term.factors) {
      product = product * ladder(f.mode, f.dagger);
    }
    out += product;
  }
  return canonicalize(out);
}

}  // namespace

PauliOperator jordan_wigner_ladder(std::uint32_t modes, std::uint32_t mode,
                                   bool dagger) {
  if (mode < 1 || mode > modes) {
    throw ValidationError("mode index out of range");
  }
  // a+_j = (X - iY)/2 on qubit j with a Z chain below; a_j is the adjoint.
  PauliString sx(modes);
  PauliString sy(modes);
  for (std::uint32_t q = 1; q < mode; ++q) {
    sx.set(q, Pauli::Z);
    sy.set(q, Pauli::Z);
  }
  sx.set(mode, Pauli::X);
  sy.set(mode, Pauli::Y);
  PauliOperator op(modes);
  op.add(sx, 0.5);
  op.add(sy, dagger ? std::complex<double>(0.0, -0.5)
                    : std::complex<double>(0.0, 0.5));
  return op;
}

PauliOperator jordan_wigner(const FermionOperator& H) {
  return map_ladder_operators(H, [&](std::uint32_t mode, bool dagger) {
    return jordan_wigner_ladder(H.modes(), mode, dagger);
  });
}

PauliOperator bravyi_kitaev_ladder(const FenwickTree& tree,
                                   std::uint32_t mode, bool dagger) {
  const std::uint32_t modes = tree.modes();
  if (mode < 1 || mode > modes) {
    throw ValidationError("mode index out of range");
  }
  const std::uint32_t j = mode - 1;  // tree nodes are 0-based

  PauliString sx(modes);
  for (auto q : tree.update_set(j)) sx.set(q + 1, Pauli::X);
  sx.set(mode, Pauli::X);
  for (auto q : tree.parity_set(j)) sx.set(q + 1, Pauli::Z);

  PauliString sy(modes);
  for (auto q : tree.update_set(j)) sy.set(q + 1, Pauli::X);
  sy.set(mode, Pauli::Y);
  for (auto q : tree.remainder_set(j)) sy.set(q + 1, Pauli::Z);

  PauliOperator op(modes);
  op.add(sx, 0.5);
  op.add(sy, dagger ? std::complex<double>(0.0, -0.5)
                    : std::complex<double>(0.0, 0.5));
  return op;
}

PauliOperator bravyi_kitaev(const FermionOperator& H) {
  const FenwickTree tree(H.modes());
  return map_ladder_operators(H, [&](std::uint32_t mode, bool dagger) {
    return bravyi_kitaev_ladder(tree, mode, dagger);
  });
}

}  // namespace f2q
