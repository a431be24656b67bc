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

#include "f2q/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

#include "f2q/trotter.hpp"

namespace f2q {

namespace {

bool is_z_only(const PauliString& s) { return s.x_mask() == 0; }

void sort_by_magnitude(std::vector<PauliTerm>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const PauliTerm& a, const PauliTerm& b) {
              const double ma = std::abs(a.coefficient);
              const double mb = std::abs(b.coefficient);
              if (ma != mb) return ma < mb;
              return a.string < b.string;
            });
}

// Unbiased draw in [0, bound) by rejection; mt19937_64 output is fully
// specified, so shuffles reproduce across platforms.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit =
      (std::numeric_limits<std::uint64_t>::max() / bound) * bound;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

}  // namespace

std::vector<PauliTerm> non_identity_terms(const PauliOperator& H) {
  std::vector<PauliTerm> out;
  for (const auto& [s, c] : H.term_map()) {
    if (!s.is_identity()) out.push_back({c, s});
  }
  return out;
}

double identity_coefficient(const PauliOperator& H) {
  return H.coefficient(PauliString(H.qubits())).real();
}

std::vector<PauliTerm> magnitude_ordering(const PauliOperator& H) {
  std::vector<PauliTerm> z_group;
  std::vector<PauliTerm> xy_group;
  for (const auto& t : non_identity_terms(H)) {
    (is_z_only(t.string) ? z_group : xy_group).push_back(t);
  }
  sort_by_magnitude(z_group);
  sort_by_magnitude(xy_group);

  std::vector<PauliTerm> out;
  out.reserve(z_group.size() + xy_group.size());
  std::size_t k = 0;
  for (; k < xy_group.size(); ++k) {
    if (k < z_group.size()) out.push_back(z_group[k]);
    out.push_back(xy_group[k]);
  }
  for (; k < z_group.size(); ++k) out.push_back(z_group[k]);
  return out;
}

std::vector<std::uint32_t> magnitude_permutation(const PauliOperator& H) {
  const auto base = non_identity_terms(H);
  std::vector<std::uint32_t> perm;
  perm.reserve(base.size());
  for (const auto& t : magnitude_ordering(H)) {
    for (std::uint32_t k = 0; k < base.size(); ++k) {
      if (base[k].string == t.string) {
        perm.push_back(k);
        break;
      }
    }
  }
  return perm;
}

OrderingRecord magnitude_record(const PauliOperator& H, std::uint64_t seed) {
  OrderingRecord rec;
  rec.id = "magnitude";
  rec.seed = seed;
  rec.permutation = magnitude_permutation(H);
  return rec;
}

std::vector<OrderingRecord> random_orderings(const PauliOperator& H,
                                             std::uint32_t count,
                                             std::uint64_t seed) {
  if (count < 1) throw ValidationError("ordering count must be >= 1");
  const auto m = static_cast<std::uint32_t>(non_identity_terms(H).size());

  std::vector<OrderingRecord> out;
  out.reserve(count);
  for (std::uint32_t index = 1; index <= count; ++index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32), index};
    std::mt19937_64 rng(seq);

    std::vector<std::uint32_t> perm(m);
    for (std::uint32_t k = 0; k < m; ++k) perm[k] = k;
    for (std::uint32_t k = m; k > 1; --k) {
      const auto j = static_cast<std::uint32_t>(bounded_draw(rng, k));
      std::swap(perm[k - 1], perm[j]);
    }

    OrderingRecord rec;
    char buf[24];
    std::snprintf(buf, sizeof(buf), "random-%04u", index);
    rec.id = buf;
    rec.seed = seed;
    rec.permutation = std::move(perm);
    out.push_back(std::move(rec));
  }
  return out;
}

ScanResult ordering_scan(const PauliOperator& H,
                         std::vector<OrderingRecord> orderings, double t,
                         const std::vector<int>& n_values,
                         const StateVector& reference_ground,
                         const DenseMatrix* restriction, int order) {
  if (n_values.empty()) {
    throw ValidationError("ordering scan needs at least one step count");
  }
  const auto base_terms = non_identity_terms(H);
  const double constant = identity_coefficient(H);

  StateVector ref = reference_ground;
  if (restriction != nullptr) {
    ref = restriction->adjoint() * reference_ground;
    const double norm = ref.norm();
    if (norm < 1e-9) {
      throw NumericError(
          "reference state has no weight inside the restriction subspace");
    }
    ref /= norm;
  }
  const DenseMatrix h_dense = [&] {
    DenseMatrix full = to_dense_matrix(H);
    if (restriction != nullptr) {
      return DenseMatrix(restriction->adjoint() * full * (*restriction));
    }
    return full;
  }();
  const double e0 = (ref.adjoint() * h_dense * ref).eval()(0, 0).real();

  for (auto& rec : orderings) {
    if (rec.permutation.size() != base_terms.size()) {
      throw ValidationError("ordering permutation has the wrong length");
    }
    std::vector<PauliTerm> ordered;
    ordered.reserve(base_terms.size());
    for (auto k : rec.permutation) ordered.push_back(base_terms.at(k));

    rec.energies.clear();
    rec.errors.clear();
    for (int n : n_values) {
      const auto plan = make_trotter_plan(ordered, constant, order, n, t);
      DenseMatrix u = trotter_evolution(plan);
      if (restriction != nullptr) {
        u = restriction->adjoint() * u * (*restriction);
      }
      const double e = trotter_energy(u, t, ref);
      rec.energies.push_back(e);
      rec.errors.push_back(std::abs(e - e0));
    }
  }

  std::sort(orderings.begin(), orderings.end(),
            [](const OrderingRecord& a, const OrderingRecord& b) {
              if (a.errors.front() != b.errors.front()) {
                return a.errors.front() < b.errors.front();
              }
              return a.id < b.id;
            });

  ScanResult result;
  result.n_values = n_values;
  result.reference_energy = e0;
  result.best_error_per_n.assign(n_values.size(),
                                 std::numeric_limits<double>::infinity());
  for (const auto& rec : orderings) {
    for (std::size_t k = 0; k < n_values.size(); ++k) {
      result.best_error_per_n[k] =
          std::min(result.best_error_per_n[k], rec.errors[k]);
    }
  }
  result.records = std::move(orderings);
  return result;
}

}  // namespace f2q
