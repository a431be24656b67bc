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

#include <doctest.h>

#include <algorithm>
#include <random>

#include "f2q/transforms.hpp"
#include "support/fock_oracle.hpp"
#include "support/h2_data.hpp"
#include "support/kron_oracle.hpp"
#include "support/random_gen.hpp"

using namespace f2q;
using f2q::testing::fock_matrix;
using f2q::testing::kron_operator_matrix;
using f2q::testing::kron_string_matrix;

namespace {

void check_matches_printed(const PauliOperator& op,
                           const testing::PrintedTerms& printed,
                           double tol = 5e-5) {
  REQUIRE(op.size() == printed.size());
  for (const auto& [letters, value] : printed) {
    const auto c = op.coefficient(PauliString::from_letters(letters));
    INFO("term ", letters);
    CHECK(std::abs(c.real() - value) < tol);
    CHECK(std::abs(c.imag()) < 1e-12);
  }
}

FermionOperator single_number_op(std::uint32_t modes, std::uint32_t mode,
                                 double c) {
  FermionOperator H(modes);
  H.add({c, {{mode, true}, {mode, false}}});
  return H;
}

}  // namespace

TEST_CASE("JW: number operator on one mode is (I - Z)/2") {
  const auto op = jordan_wigner(single_number_op(1, 1, 1.0));
  CHECK(op.coefficient(PauliString::from_letters("I")) == 0.5);
  CHECK(op.coefficient(PauliString::from_letters("Z")) == -0.5);
  CHECK(op.size() == 2);
}

TEST_CASE("JW: H2 matches the published 15-term operator") {
  check_matches_printed(jordan_wigner(testing::load_h2()),
                        testing::printed_h2_jw());
}

TEST_CASE("JW: hopping term against the occupation-basis oracle") {
  FermionOperator H(2);
  H.add({1.0, {{1, true}, {2, false}}});
  H.add({1.0, {{2, true}, {1, false}}});
  const auto op = jordan_wigner(H);
  CHECK(op.coefficient(PauliString::from_letters("XX")) == 0.5);
  CHECK(op.coefficient(PauliString::from_letters("YY")) == 0.5);
  CHECK(op.size() == 2);
  const Eigen::MatrixXcd diff = kron_operator_matrix(op) - fock_matrix(H);
  CHECK(diff.cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("JW ladder operators act per the occupation rules, M <= 4") {
  for (std::uint32_t modes = 1; modes <= 4; ++modes) {
    for (std::uint32_t j = 1; j <= modes; ++j) {
      for (bool dagger : {false, true}) {
        FermionOperator single(modes);
        // Oracle matrix for the bare ladder operator.
        const auto oracle = testing::ladder_matrix(modes, j, dagger);
        const auto op = jordan_wigner_ladder(modes, j, dagger);
        const Eigen::MatrixXcd diff = kron_operator_matrix(op) - oracle;
        INFO("modes ", modes, " mode ", j, " dagger ", dagger);
        CHECK(diff.cwiseAbs().maxCoeff() < 1e-14);
      }
    }
  }
}

TEST_CASE("BK: single mode coincides with JW") {
  const auto op = bravyi_kitaev(single_number_op(1, 1, 1.0));
  CHECK(op.coefficient(PauliString::from_letters("I")) == 0.5);
  CHECK(op.coefficient(PauliString::from_letters("Z")) == -0.5);
}

TEST_CASE("BK: H2 matches the published operator") {
  check_matches_printed(bravyi_kitaev(testing::load_h2()),
                        testing::printed_h2_bk());
}

TEST_CASE("BK spectra equal JW spectra for random operators") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 10; ++trial) {
    const auto H = testing::random_even_operator(rng, 3);
    const auto jw = to_dense_matrix(jordan_wigner(H));
    const auto bk = to_dense_matrix(bravyi_kitaev(H));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> sj(jw);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> sb(bk);
    CHECK((sj.eigenvalues() - sb.eigenvalues()).cwiseAbs().maxCoeff() <
          1e-10);
  }
}

TEST_CASE("Fenwick tree sets are mutually consistent, M <= 9") {
  for (std::uint32_t modes = 1; modes <= 9; ++modes) {
    const FenwickTree tree(modes);
    // Encode every occupation vector: bit j of the code is the subtree
    // parity at node j.
    std::vector<std::vector<std::uint32_t>> subtree(modes);
    for (std::uint32_t j = 0; j < modes; ++j) {
      std::vector<std::uint32_t> stack{j};
      while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        subtree[j].push_back(v);
        for (auto c : tree.children_set(v)) stack.push_back(c);
      }
    }
    for (std::uint64_t f = 0; f < (1ull << modes); ++f) {
      std::uint64_t code = 0;
      for (std::uint32_t j = 0; j < modes; ++j) {
        int parity = 0;
        for (auto v : subtree[j]) parity ^= static_cast<int>((f >> v) & 1);
        code |= static_cast<std::uint64_t>(parity) << j;
      }
      for (std::uint32_t j = 0; j < modes; ++j) {
        // parity set: occupation parity of modes below j.
        int expect = 0;
        for (std::uint32_t s = 0; s < j; ++s) {
          expect ^= static_cast<int>((f >> s) & 1);
        }
        int got = 0;
        for (auto q : tree.parity_set(j)) {
          got ^= static_cast<int>((code >> q) & 1);
        }
        CHECK(got == expect);
        // flip (children) set: occupation of mode j itself.
        int occ = static_cast<int>((code >> j) & 1);
        for (auto q : tree.children_set(j)) {
          occ ^= static_cast<int>((code >> q) & 1);
        }
        CHECK(occ == static_cast<int>((f >> j) & 1));
      }
    }
  }
}

TEST_CASE("mode graph of H2") {
  const auto g = build_mode_graph(testing::load_h2());
  CHECK(g.vertex_count() == 4);
  REQUIRE(g.edge_count() == 4);
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> expect = {
      {1, 2}, {1, 4}, {2, 3}, {3, 4}};
  CHECK(g.edges() == expect);
  for (std::uint32_t q = 0; q < 4; ++q) {
    CHECK(g.edge_qubit(expect[q].first, expect[q].second) == q + 1);
  }
}

TEST_CASE("number and Coulomb terms contribute no edges") {
  FermionOperator H(3);
  H.add({1.0, {{1, true}, {1, false}}});
  H.add({0.5, {{1, true}, {2, true}, {2, false}, {1, false}}});
  const auto g = build_mode_graph(H);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("a single excitation pair gives one edge") {
  FermionOperator H(2);
  H.add({0.5, {{1, true}, {2, false}}});
  H.add({0.5, {{2, true}, {1, false}}});
  const auto g = build_mode_graph(H);
  REQUIRE(g.edge_count() == 1);
  CHECK(g.edges().front() == std::make_pair(1u, 2u));
}

TEST_CASE("unsupported terms abort graph construction with the term name") {
  FermionOperator H(3);
  H.add({0.5, {{1, true}, {2, true}, {1, false}, {3, false}}});
  try {
    build_mode_graph(H);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("a+_1 a+_2 a_1 a_3") !=
          std::string::npos);
  }
}

TEST_CASE("edge operators reproduce the published H2 forms") {
  const auto g = build_mode_graph(testing::load_h2());
  const auto ops = edge_operators(g);
  const auto& printed = testing::printed_h2_edge_operators();
  for (std::uint32_t i = 1; i <= 4; ++i) {
    CHECK(ops.vertex_operator(i).coefficient(
              PauliString::from_letters(printed[i - 1].first)) == 1.0);
  }
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> edges = {
      {1, 2}, {1, 4}, {2, 3}, {3, 4}};
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto op = ops.edge_operator(edges[k].first, edges[k].second);
    CHECK(op.coefficient(
              PauliString::from_letters(printed[4 + k].first)) == 1.0);
    CHECK(op.size() == 1);
  }
}

TEST_CASE("smallest graph: two modes, one edge") {
  const ModeGraph g(2, {{1, 2}});
  const auto ops = edge_operators(g);
  CHECK(ops.vertex_operator(1).coefficient(PauliString::from_letters("Z")) ==
        1.0);
  CHECK(ops.vertex_operator(2).coefficient(PauliString::from_letters("Z")) ==
        1.0);
  CHECK(ops.edge_operator(1, 2).coefficient(
            PauliString::from_letters("X")) == 1.0);
}

TEST_CASE("edge operator antisymmetry") {
  const auto g = build_mode_graph(testing::load_h2());
  const auto ops = edge_operators(g);
  CHECK(ops.edge_operator(2, 1).coefficient(
            PauliString::from_letters("IIIX")) == -1.0);
}

TEST_CASE("missing edges are lookup errors") {
  const auto g = build_mode_graph(testing::load_h2());
  const auto ops = edge_operators(g);
  CHECK_THROWS_AS(ops.edge_operator(1, 3), ValidationError);
}

TEST_CASE("edge-operator algebra on random connected graphs") {
  std::mt19937 rng(77);
  int checked = 0;
  while (checked < 25) {
    const auto g = testing::random_connected_graph(rng);
    if (g.edge_count() > 8) continue;
    ++checked;
    const auto ops = edge_operators(g);
    const Eigen::Index dim = 1ll << g.edge_count();
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);

    std::vector<Eigen::MatrixXcd> b(g.vertex_count() + 1);
    for (std::uint32_t i = 1; i <= g.vertex_count(); ++i) {
      b[i] = kron_operator_matrix(ops.vertex_operator(i));
      CHECK((b[i] - b[i].adjoint()).cwiseAbs().maxCoeff() < 1e-14);
      CHECK((b[i] * b[i] - id).cwiseAbs().maxCoeff() < 1e-14);
    }
    for (std::uint32_t i = 1; i <= g.vertex_count(); ++i) {
      for (std::uint32_t j = 1; j <= g.vertex_count(); ++j) {
        CHECK((b[i] * b[j] - b[j] * b[i]).cwiseAbs().maxCoeff() < 1e-14);
      }
    }

    std::vector<std::pair<std::uint32_t, std::uint32_t>> oriented;
    for (const auto& e : g.edges()) {
      oriented.push_back(e);
      oriented.emplace_back(e.second, e.first);
    }
    for (const auto& [i, j] : oriented) {
      const auto aij = kron_operator_matrix(ops.edge_operator(i, j));
      const auto aji = kron_operator_matrix(ops.edge_operator(j, i));
      CHECK((aij - aij.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
      CHECK((aij * aij - id).cwiseAbs().maxCoeff() < 1e-14);
      CHECK((aij + aji).cwiseAbs().maxCoeff() < 1e-14);
      for (std::uint32_t k = 1; k <= g.vertex_count(); ++k) {
        const double sign = (k == i || k == j) ? -1.0 : 1.0;
        CHECK((aij * b[k] - sign * b[k] * aij).cwiseAbs().maxCoeff() <
              1e-14);
      }
    }
    for (const auto& [i, j] : oriented) {
      const auto aij = kron_operator_matrix(ops.edge_operator(i, j));
      for (const auto& [k, l] : oriented) {
        const auto akl = kron_operator_matrix(ops.edge_operator(k, l));
        const int coincidences = (i == k) + (i == l) + (j == k) + (j == l);
        const double sign = (coincidences % 2 == 0) ? 1.0 : -1.0;
        CHECK((aij * akl - sign * akl * aij).cwiseAbs().maxCoeff() < 1e-14);
      }
    }
  }
}

TEST_CASE("BKSF: H2 matches the published 14-term operator") {
  const auto H = testing::load_h2();
  const auto g = build_mode_graph(H);
  const auto op = bksf_transform(H, g);
  check_matches_printed(op, testing::printed_h2_bksf());
  // Canonicalized term count includes the identity.
  CHECK(canonicalize(op).size() == 14);
}

TEST_CASE("BKSF: single number operator on the H2 graph") {
  const auto g = build_mode_graph(testing::load_h2());
  const auto op = bksf_transform(single_number_op(4, 1, 0.8), g);
  CHECK(op.coefficient(PauliString::from_letters("IIII")) == 0.4);
  CHECK(op.coefficient(PauliString::from_letters("IIZZ")) == -0.4);
  CHECK(op.size() == 2);
}

TEST_CASE("BKSF: odd-parity terms are rejected") {
  FermionOperator H(4);
  H.add({1.0, {{1, true}}});
  const auto g = build_mode_graph(testing::load_h2());
  try {
    bksf_transform(H, g);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("odd") != std::string::npos);
  }
}

TEST_CASE("cycle basis of the H2 graph is the single loop 1-2-3-4") {
  const auto g = build_mode_graph(testing::load_h2());
  const auto loops = cycle_basis(g);
  REQUIRE(loops.size() == 1);
  CHECK(loops.front().vertices ==
        std::vector<std::uint32_t>{1, 2, 3, 4});
  CHECK(loops.front().edge_qubits ==
        std::vector<std::uint32_t>{1, 3, 4, 2});
}

TEST_CASE("trees have no loops, complete graphs have E - M + 1") {
  const ModeGraph path(4, {{1, 2}, {2, 3}, {3, 4}});
  CHECK(cycle_basis(path).empty());

  const ModeGraph k4(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(cycle_basis(k4).size() == 3);
}

TEST_CASE("disconnected graphs are rejected") {
  const ModeGraph g(4, {{1, 2}, {3, 4}});
  CHECK_THROWS_AS(cycle_basis(g), ValidationError);
}

TEST_CASE("H2 loop stabilizer equals the dense product of edge operators") {
  const auto g = build_mode_graph(testing::load_h2());
  const auto loops = cycle_basis(g);
  const auto stab = loop_stabilizer(g, loops.front());

  // Printed: -X4 Y3 Y2 X1.
  CHECK(stab.coefficient(PauliString::from_letters("XYYX")) == -1.0);
  CHECK(stab.size() == 1);

  // Oracle: i^4 A12 A23 A34 A41 as a dense product of the printed edge
  // operator matrices.
  const auto a12 = kron_string_matrix(PauliString::from_letters("IIIX"));
  const auto a23 = kron_string_matrix(PauliString::from_letters("IXIZ"));
  const auto a34 = kron_string_matrix(PauliString::from_letters("XZZI"));
  const auto a41 =
      (-1.0 * kron_string_matrix(PauliString::from_letters("IIXZ"))).eval();
  const Eigen::MatrixXcd oracle = a12 * a23 * a34 * a41;
  CHECK((kron_operator_matrix(stab) - oracle).cwiseAbs().maxCoeff() <
        1e-14);
}

TEST_CASE("triangle stabilizer is a weight-3 term with unit coefficient") {
  const ModeGraph g(3, {{1, 2}, {1, 3}, {2, 3}});
  const auto loops = cycle_basis(g);
  REQUIRE(loops.size() == 1);
  const auto stab = loop_stabilizer(g, loops.front());
  const auto term = stab.terms().front();
  CHECK(std::abs(std::abs(term.coefficient.real()) - 1.0) < 1e-14);
  CHECK(weight_profile(term.string).weight == 3);

  // Dense oracle on 8x8.
  const auto ops = edge_operators(g);
  Eigen::MatrixXcd oracle = Eigen::MatrixXcd::Identity(8, 8);
  const auto& v = loops.front().vertices;
  for (std::size_t t = 0; t < 3; ++t) {
    oracle = oracle *
             kron_operator_matrix(ops.edge_operator(v[t], v[(t + 1) % 3]));
  }
  oracle *= std::complex<double>(0, 1) * std::complex<double>(0, 1) *
            std::complex<double>(0, 1);
  CHECK((kron_operator_matrix(stab) - oracle).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("stabilizers square to +identity") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = testing::random_connected_graph(rng);
    for (const auto& op : build_stabilizers(g).operators) {
      const auto sq = canonicalize(op * op);
      CHECK(sq.size() == 1);
      CHECK(std::abs(sq.coefficient(PauliString(g.edge_count())) -
                     std::complex<double>(1.0)) < 1e-14);
    }
  }
}

TEST_CASE("vacuum state of the H2 graph is (|0000> + |1111>)/sqrt(2)") {
  const auto g = build_mode_graph(testing::load_h2());
  const auto stabs = build_stabilizers(g);
  const auto vac = vacuum_state(g, stabs);
  REQUIRE(vac.size() == 16);
  const double amp = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(vac(0) - amp) < 1e-12);
  CHECK(std::abs(vac(15) - amp) < 1e-12);
  for (int k = 1; k < 15; ++k) CHECK(std::abs(vac(k)) < 1e-12);
}

TEST_CASE("tree graphs leave the seed state unchanged") {
  const ModeGraph g(3, {{1, 2}, {2, 3}});
  const auto stabs = build_stabilizers(g);
  const auto vac = vacuum_state(g, stabs);
  CHECK(std::abs(vac(0) - 1.0) < 1e-14);
}

TEST_CASE("vacuum has zero occupation in every mode") {
  const auto H = testing::load_h2();
  const auto g = build_mode_graph(H);
  const auto stabs = build_stabilizers(g);
  const auto vac = vacuum_state(g, stabs);
  const auto ops = edge_operators(g);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(16, 16);
  for (std::uint32_t i = 1; i <= 4; ++i) {
    const Eigen::MatrixXcd number =
        0.5 * (id - kron_operator_matrix(ops.vertex_operator(i)));
    const std::complex<double> expectation =
        (vac.adjoint() * number * vac)(0, 0);
    CHECK(std::abs(expectation) < 1e-12);
  }
}

TEST_CASE("an annihilating fabricated stabilizer raises the seed error") {
  const ModeGraph g(2, {{1, 2}});
  StabilizerSet fake;
  fake.operators.push_back(
      PauliOperator::single_term(-1.0, PauliString::from_letters("I")));
  CHECK_THROWS_AS(vacuum_state(g, fake), NumericError);
}

TEST_CASE("basis stabilizer products stabilize the vacuum") {
  std::mt19937 rng(404);
  int checked = 0;
  while (checked < 10) {
    const auto g = testing::random_connected_graph(rng);
    const auto stabs = build_stabilizers(g);
    if (stabs.operators.size() < 2 || g.edge_count() > 10) continue;
    ++checked;
    const auto vac = vacuum_state(g, stabs);
    // Product over every nonempty subset of basis loops stabilizes vac.
    const auto n_loops = stabs.operators.size();
    for (std::uint64_t mask = 1; mask < (1ull << n_loops); ++mask) {
      PauliOperator prod = PauliOperator::identity(g.edge_count());
      for (std::size_t k = 0; k < n_loops; ++k) {
        if (mask & (1ull << k)) prod = prod * stabs.operators[k];
      }
      const auto term = canonicalize(prod).terms().front();
      const auto applied = apply_term(term, vac);
      CHECK((applied - vac).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("stabilizers commute with each other and the Hamiltonian") {
  const auto H = testing::load_h2();
  const auto g = build_mode_graph(H);
  const auto stabs = build_stabilizers(g);
  const auto op = bksf_transform(H, g);
  for (const auto& s : stabs.operators) {
    const auto& s_string = s.terms().front().string;
    for (const auto& t : stabs.operators) {
      CHECK(commutes(s_string, t.terms().front().string));
    }
    for (const auto& [string, c] : op.term_map()) {
      CHECK(commutes(s_string, string));
    }
  }
}

TEST_CASE("spectral equivalence across all three transforms, M <= 5") {
  std::mt19937 rng(515);
  int checked = 0;
  while (checked < 25) {
    const std::uint32_t modes = 2 + rng() % 4;
    const auto H = testing::random_even_operator(rng, modes);
    const auto g = build_mode_graph(H);
    if (g.edge_count() > 8 || !g.connected()) continue;
    ++checked;

    const auto jw = to_dense_matrix(jordan_wigner(H));
    const auto bk = to_dense_matrix(bravyi_kitaev(H));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> sj(jw);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> sb(bk);
    CHECK((sj.eigenvalues() - sb.eigenvalues()).cwiseAbs().maxCoeff() <
          1e-10);

    // Superfast spectrum inside the code space vs the even-particle
    // sector of the occupation-basis oracle.
    const auto stabs = build_stabilizers(g);
    const auto bksf = bksf_transform(H, g);
    const auto projector = code_space_projector(stabs, g.edge_count());
    const auto basis = orthonormal_range(projector);
    CHECK(basis.cols() == (1ll << (modes - 1)));
    const Eigen::MatrixXcd restricted =
        basis.adjoint() * to_dense_matrix(bksf) * basis;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> sr(restricted);
    const auto even = testing::even_sector_eigenvalues(H);
    REQUIRE(sr.eigenvalues().size() == even.size());
    CHECK((sr.eigenvalues() - even).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("graph dump format") {
  const auto g = build_mode_graph(testing::load_h2());
  std::ostringstream out;
  g.dump(out);
  CHECK(out.str() ==
        "edge 1 2 qubit 1\nedge 1 4 qubit 2\nedge 2 3 qubit 3\n"
        "edge 3 4 qubit 4\n");
}
