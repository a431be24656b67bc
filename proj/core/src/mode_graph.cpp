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

#include "f2q/mode_graph.hpp"

#include <algorithm>
#include <ostream>
#include <set>

namespace f2q {

ModeGraph::ModeGraph(
    std::uint32_t vertices,
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges)
    : vertices_(vertices), adjacency_(vertices + 1) {
  if (vertices == 0) throw ValidationError("graph needs at least one vertex");

  std::set<std::pair<std::uint32_t, std::uint32_t>> unique;
  for (auto [i, j] : edges) {
    if (i == j) {
      throw ValidationError("self-loop on vertex " + std::to_string(i));
    }
    if (i < 1 || j < 1 || i > vertices || j > vertices) {
      throw ValidationError("edge endpoint out of range 1.." +
                            std::to_string(vertices));
    }
    unique.insert({std::min(i, j), std::max(i, j)});
  }
  edges_.assign(unique.begin(), unique.end());
  for (std::uint32_t q = 0; q < edges_.size(); ++q) {
    qubit_of_[edges_[q]] = q + 1;
    adjacency_[edges_[q].first].push_back(edges_[q].second);
    adjacency_[edges_[q].second].push_back(edges_[q].first);
  }
  for (auto& a : adjacency_) std::sort(a.begin(), a.end());
}

bool ModeGraph::has_edge(std::uint32_t i, std::uint32_t j) const {
  return qubit_of_.count({std::min(i, j), std::max(i, j)}) != 0;
}

std::uint32_t ModeGraph::edge_qubit(std::uint32_t i, std::uint32_t j) const {
  auto it = qubit_of_.find({std::min(i, j), std::max(i, j)});
  if (it == qubit_of_.end()) {
    throw ValidationError("no edge between vertices " + std::to_string(i) +
                          " and " + std::to_string(j));
  }
  return it->second;
}

double ModeGraph::orientation(std::uint32_t i, std::uint32_t j) const {
  edge_qubit(i, j);
  return i < j ? 1.0 : -1.0;
}

const std::vector<std::uint32_t>& ModeGraph::neighbors(
    std::uint32_t v) const {
  if (v < 1 || v > vertices_) {
    throw ValidationError("vertex " + std::to_string(v) + " out of range");
  }
  return adjacency_[v];
}

bool ModeGraph::connected() const {
  std::vector<bool> seen(vertices_ + 1, false);
  std::vector<std::uint32_t> stack{1};
  seen[1] = true;
  std::uint32_t visited = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto u : adjacency_[v]) {
      if (!seen[u]) {
        seen[u] = true;
        ++visited;
        stack.push_back(u);
      }
    }
  }
  return visited == vertices_;
}

void ModeGraph::dump(std::ostream& out) const {
  for (std::uint32_t q = 0; q < edges_.size(); ++q) {
    out << "edge " << edges_[q].first << ' ' << edges_[q].second << " qubit "
        << (q + 1) << '\n';
  }
}

ModeGraph build_mode_graph(const FermionOperator& H) {
  const ClassifiedOperator classified = classify_operator(H);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (const auto& rec : classified.interactions) {
    switch (rec.cls) {
      case OperatorClass::Number:
      case OperatorClass::CoulombExchange:
        break;
      case OperatorClass::Excitation:
      case OperatorClass::PairCreation:
        edges.emplace_back(rec.modes[0], rec.modes[1]);
        break;
      case OperatorClass::NumberExcitation:
        edges.emplace_back(rec.modes[0], rec.modes[2]);
        break;
      case OperatorClass::DoubleExcitation:
        edges.emplace_back(rec.modes[0], rec.modes[1]);
        edges.emplace_back(rec.modes[2], rec.modes[3]);
        break;
      case OperatorClass::Unsupported:
        throw ValidationError(
            "term '" + rec.description +
            "' matches no supported operator pattern" +
            (rec.odd_parity ? " (odd ladder-operator count)" : ""));
    }
  }
  return ModeGraph(H.modes(), std::move(edges));
}

}  // namespace f2q
