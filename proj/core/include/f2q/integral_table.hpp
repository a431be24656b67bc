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
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "f2q/fermion_op.hpp"

namespace f2q {

struct OneBodyEntry {
  std::uint32_t i, j;
  double value;  // Hartree
};

struct TwoBodyEntry {
  std::uint32_t i, j, k, l;
  double value;  // Hartree, raw (unscaled)
};

/// Molecular integrals in the MOLINT text format:
///
///   # comments and blank lines are ignored
///   format molint 1
///   modes <M>
///   two_body_scale <real>      (optional, default 1)
///   constant <real>            (optional, default 0)
///   metadata <free text>       (optional, repeatable)
///   1body i j value            (1-based, Hermitian-symmetric, auto-mirrored)
///   2body i j k l value        (1-based, kept in file order)
///
/// Entries are stored exactly as written so serialization round-trips the
/// numeric values bit for bit. Repeated 2body index patterns are legal and
/// merge at assembly time.
class IntegralTable {
 public:
  static IntegralTable parse(std::istream& in);
  static IntegralTable parse_file(const std::string& path);

  void serialize(std::ostream& out) const;

  std::uint32_t modes() const { return modes_; }
  double two_body_scale() const { return two_body_scale_; }
  double constant() const { return constant_; }
  const std::string& metadata() const { return metadata_; }

  const std::vector<OneBodyEntry>& one_body_entries() const {
    return one_body_entries_;
  }
  const std::vector<TwoBodyEntry>& two_body_entries() const {
    return two_body_entries_;
  }

  /// Mirrored one-body lookup; zero when absent.
  double one_body(std::uint32_t i, std::uint32_t j) const;

  /// Sum of all raw 2body entries with this exact index pattern.
  double two_body(std::uint32_t i, std::uint32_t j, std::uint32_t k,
                  std::uint32_t l) const;

 private:
  IntegralTable() = default;

  std::uint32_t modes_ = 0;
  double two_body_scale_ = 1.0;
  double constant_ = 0.0;
  std::string metadata_;
  std::vector<OneBodyEntry> one_body_entries_;
  std::vector<TwoBodyEntry> two_body_entries_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, double> one_body_map_;
};

/// Assembles H = sum h_ij a+_i a_j + sum (scale * h_ijkl) a+_i a+_j a_k a_l
/// over the table entries exactly as listed (mirrored one-body pairs
/// included, no permutational expansion), plus the constant offset.
/// The result must be Hermitian term-for-term.
FermionOperator build_molecular_hamiltonian(const IntegralTable& table);

}  // namespace f2q
