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

// Seeded generators for property tests.

#pragma once

#include <random>
#include <set>
#include <utility>
#include <vector>

#include "f2q/fermion_op.hpp"
#include "f2q/mode_graph.hpp"
#include "f2q/pauli.hpp"

namespace f2q::testing {

inline PauliString random_string(std::mt19937& rng, std::uint32_t qubits) {
  std::uniform_int_distribution<int> letter(0, 3);
  PauliString s(qubits);
  for (std::uint32_t q = 1; q <= qubits; ++q) {
    s.set(q, static_cast<Pauli>(letter(rng)));
  }
  return s;
}

/// Connected graph on 3..6 vertices with at most `max_edges` edges
/// (spanning tree plus random extras).
inline ModeGraph random_connected_graph(std::mt19937& rng,
                                        std::uint32_t max_edges = 8) {
  std::uniform_int_distribution<std::uint32_t> nv(3, 6);
  const std::uint32_t M = nv(rng);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::set<std::pair<std::uint32_t, std::uint32_t>> used;
  for (std::uint32_t v = 2; v <= M; ++v) {
    std::uniform_int_distribution<std::uint32_t> pick(1, v - 1);
    const auto u = pick(rng);
    edges.emplace_back(u, v);
    used.insert({u, v});
  }
  std::uniform_int_distribution<std::uint32_t> extra(0, max_edges - (M - 1));
  std::uniform_int_distribution<std::uint32_t> vert(1, M);
  for (std::uint32_t k = extra(rng); k > 0; --k) {
    const auto a = vert(rng);
    const auto b = vert(rng);
    if (a == b) continue;
    const auto e = std::make_pair(std::min(a, b), std::max(a, b));
    if (used.insert(e).second) edges.push_back(e);
  }
  return ModeGraph(M, edges);
}

/// Random Hermitian even-parity operator built from the supported operator
/// patterns, with an excitation chain so the interaction graph comes out
/// connected and small enough for dense checks.
inline FermionOperator random_even_operator(std::mt19937& rng,
                                            std::uint32_t modes) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::uniform_int_distribution<std::uint32_t> mode(1, modes);
  std::uniform_int_distribution<int> count(1, 3);

  FermionOperator H(modes);
  for (std::uint32_t i = 1; i <= modes; ++i) {
    H.add({coeff(rng), {{i, true}, {i, false}}});
  }
  for (std::uint32_t i = 1; i < modes; ++i) {
    const double c = coeff(rng);
    H.add({c, {{i, true}, {i + 1, false}}});
    H.add({c, {{i + 1, true}, {i, false}}});
  }
  for (int k = count(rng); k > 0; --k) {
    const auto i = mode(rng);
    const auto j = mode(rng);
    if (i == j) continue;
    H.add({coeff(rng),
           {{std::min(i, j), true}, {std::max(i, j), true},
            {std::max(i, j), false}, {std::min(i, j), false}}});
  }
  if (modes >= 4) {
    // Double excitations carry the exchange-partner structure of real
    // molecular integrals (h_ijkl = h_ilkj): both orderings of the same
    // four modes, equal coefficient. The superfast double-excitation
    // template represents the even sector exactly for this paired form.
    const double c = coeff(rng);
    H.add({c, {{1, true}, {2, true}, {4, false}, {3, false}}});
    H.add({c, {{3, true}, {4, true}, {2, false}, {1, false}}});
    H.add({c, {{1, true}, {4, true}, {2, false}, {3, false}}});
    H.add({c, {{3, true}, {2, true}, {4, false}, {1, false}}});
  }
  if (modes >= 3) {
    // One number-excitation pair.
    const double c = coeff(rng);
    H.add({c, {{1, true}, {2, true}, {2, false}, {3, false}}});
    H.add({c, {{3, true}, {2, true}, {2, false}, {1, false}}});
  }
  return H;
}

}  // namespace f2q::testing
