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

#include <algorithm>
#include <cmath>
#include <deque>
#include <ostream>

#include "f2q/transforms.hpp"

namespace f2q {

namespace {

void fill_edge_qubits(const ModeGraph& g, Loop& loop) {
  loop.edge_qubits.clear();
  const std::size_t p = loop.vertices.size();
  for (std::size_t t = 0; t < p; ++t) {
    loop.edge_qubits.push_back(
        g.edge_qubit(loop.vertices[t], loop.vertices[(t + 1) % p]));
  }
}

// Rotate so the smallest vertex leads, then orient toward its
// smaller-indexed neighbor within the loop.
void orient_loop(Loop& loop) {
  auto& v = loop.vertices;
  const auto it = std::min_element(v.begin(), v.end());
  std::rotate(v.begin(), it, v.end());
  if (v.size() >= 3 && v[1] > v.back()) {
    std::reverse(v.begin() + 1, v.end());
  }
}

void validate_loop(const ModeGraph& g, const Loop& loop) {
  const auto& v = loop.vertices;
  if (v.size() < 3) {
    throw ValidationError("loop must have at least three vertices");
  }
  for (std::size_t t = 0; t < v.size(); ++t) {
    const auto a = v[t];
    const auto b = v[(t + 1) % v.size()];
    if (!g.has_edge(a, b)) {
      throw ValidationError("loop vertices " + std::to_string(a) + " and " +
                            std::to_string(b) + " are not adjacent");
    }
  }
}

}  // namespace

std::vector<Loop> cycle_basis(const ModeGraph& g) {
  if (!g.connected()) {
    throw ValidationError(
        "cycle basis requires a connected interaction graph");
  }

  // Breadth-first spanning tree from vertex 1, neighbors ascending.
  const std::uint32_t M = g.vertex_count();
  std::vector<std::uint32_t> parent(M + 1, 0);
  std::vector<bool> seen(M + 1, false);
  std::deque<std::uint32_t> queue{1};
  seen[1] = true;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> tree_edges;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (auto u : g.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = true;
        parent[u] = v;
        tree_edges.emplace_back(std::min(u, v), std::max(u, v));
        queue.push_back(u);
      }
    }
  }
  std::sort(tree_edges.begin(), tree_edges.end());

  auto path_to_root = [&](std::uint32_t v) {
    std::vector<std::uint32_t> path{v};
    while (v != 1) {
      v = parent[v];
      path.push_back(v);
    }
    return path;
  };

  std::vector<Loop> loops;
  for (const auto& e : g.edges()) {
    if (std::binary_search(tree_edges.begin(), tree_edges.end(), e)) {
      continue;
    }
    const auto pu = path_to_root(e.first);
    const auto pv = path_to_root(e.second);
    // Strip the common tail to find the meeting vertex.
    std::size_t cu = pu.size();
    std::size_t cv = pv.size();
    while (cu > 1 && cv > 1 && pu[cu - 2] == pv[cv - 2]) {
      --cu;
      --cv;
    }
    Loop loop;
    loop.vertices.assign(pu.begin(), pu.begin() + static_cast<long>(cu));
    for (std::size_t t = cv - 1; t-- > 0;) {
      loop.vertices.push_back(pv[t]);
    }
    orient_loop(loop);
    fill_edge_qubits(g, loop);
    loops.push_back(std::move(loop));
  }
  return loops;
}

PauliOperator loop_stabilizer(const ModeGraph& g, const Loop& loop) {
  validate_loop(g, loop);
  const EdgeOperators ops(g);
  const std::size_t p = loop.vertices.size();

  PauliOperator stab = PauliOperator::identity(g.edge_count());
  for (std::size_t t = 0; t < p; ++t) {
    stab = stab * ops.edge_operator(loop.vertices[t],
                                    loop.vertices[(t + 1) % p]);
  }
  std::complex<double> i_to_p(1.0, 0.0);
  for (std::size_t t = 0; t < p; ++t) i_to_p *= std::complex<double>(0, 1);
  stab *= i_to_p;
  stab = canonicalize(stab);

  if (stab.size() != 1) {
    throw NumericError("loop stabilizer is not a single Pauli term");
  }
  const auto term = stab.terms().front();
  if (std::abs(term.coefficient.imag()) > 1e-12 ||
      std::abs(std::abs(term.coefficient.real()) - 1.0) > 1e-12) {
    throw NumericError("loop stabilizer coefficient is not +1 or -1");
  }
  return stab;
}

StabilizerSet build_stabilizers(const ModeGraph& g) {
  StabilizerSet out;
  out.loops = cycle_basis(g);
  out.operators.reserve(out.loops.size());
  for (const auto& loop : out.loops) {
    out.operators.push_back(loop_stabilizer(g, loop));
  }
  return out;
}

DenseMatrix code_space_projector(const StabilizerSet& stabs,
                                 std::uint32_t qubits) {
  const std::uint64_t dim = 1ull << qubits;
  DenseMatrix proj = DenseMatrix::Identity(static_cast<Eigen::Index>(dim),
                                           static_cast<Eigen::Index>(dim));
  for (const auto& op : stabs.operators) {
    proj = 0.5 * (proj + to_dense_matrix(op) * proj);
  }
  return proj;
}

StateVector vacuum_state(const ModeGraph& g, const StabilizerSet& stabs,
                         std::uint64_t seed_basis_state) {
  const std::uint32_t qubits = g.edge_count();
  if (qubits > kMaxDenseQubits) {
    throw ValidationError("vacuum state construction capped at " +
                          std::to_string(kMaxDenseQubits) + " edge qubits");
  }
  const std::uint64_t dim = 1ull << qubits;
  if (seed_basis_state >= dim) {
    throw ValidationError("seed basis state out of range");
  }
  StateVector v = StateVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(seed_basis_state)) = 1.0;
  for (const auto& op : stabs.operators) {
    const auto term = op.terms().front();
    v = v + apply_term(term, v);
  }
  const double norm = v.norm();
  if (norm < 1e-12) {
    throw NumericError(
        "code-space projection annihilated the seed basis state; retry "
        "with a different seed");
  }
  return v / norm;
}

void dump_stabilizers(std::ostream& out, const StabilizerSet& stabs) {
  for (const auto& op : stabs.operators) {
    out << render(op) << '\n';
  }
}

}  // namespace f2q
