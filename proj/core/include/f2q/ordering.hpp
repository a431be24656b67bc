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

#include <cstdint>
#include <string>
#include <vector>

#include "f2q/dense.hpp"
#include "f2q/pauli.hpp"

namespace f2q {

/// Non-identity terms of H in canonical order; the permutation domain for
/// every ordering below.
std::vector<PauliTerm> non_identity_terms(const PauliOperator& H);

/// Real identity coefficient of H (zero when absent).
double identity_coefficient(const PauliOperator& H);

/// Magnitude ordering: Z-only and XY-containing term groups, each sorted
/// ascending by |coefficient| (ties broken lexicographically on the
/// rendered string), interleaved Z1, XY1, Z2, XY2, ... until the XY group
/// runs out; the remaining Z terms follow at the end. The identity term is
/// excluded (it evolves as a global phase).
std::vector<PauliTerm> magnitude_ordering(const PauliOperator& H);

/// The same ordering as indices into non_identity_terms(H).
std::vector<std::uint32_t> magnitude_permutation(const PauliOperator& H);

/// One term ordering with its scan results.
struct OrderingRecord {
  std::string id;  // "magnitude" or "random-0001".."random-NNNN"
  std::uint64_t seed = 0;
  std::vector<std::uint32_t> permutation;  // into non_identity_terms(H)
  std::vector<double> energies;            // per scanned step count
  std::vector<double> errors;              // |E - E0| per scanned step count
};

/// `count` uniform permutations drawn with a Fisher-Yates shuffle over a
/// mersenne-twister stream (mt19937_64, seeded per record from
/// {seed, index} through std::seed_seq), so results reproduce exactly for
/// a given (seed, index) on any platform.
std::vector<OrderingRecord> random_orderings(const PauliOperator& H,
                                             std::uint32_t count,
                                             std::uint64_t seed);

OrderingRecord magnitude_record(const PauliOperator& H, std::uint64_t seed);

struct ScanResult {
  std::vector<int> n_values;
  std::vector<OrderingRecord> records;  // sorted by single-step error
  std::vector<double> best_error_per_n;
  double reference_energy = 0.0;
};

/// Evaluates first-order (or higher, via `order`) Trotter energies for
/// every ordering and step count against the exact ground energy of H.
/// `reference_ground` must be the exact ground eigenvector in the full
/// space. When `restriction` is given (orthonormal columns spanning an
/// invariant subspace, e.g. the superfast code space), the evolution
/// unitary and reference are restricted to it before energy extraction.
ScanResult ordering_scan(const PauliOperator& H,
                         std::vector<OrderingRecord> orderings, double t,
                         const std::vector<int>& n_values,
                         const StateVector& reference_ground,
                         const DenseMatrix* restriction = nullptr,
                         int order = 1);

}  // namespace f2q
