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

#include "f2q/integral_table.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace f2q {

namespace {

[[noreturn]] void fail_parse(std::size_t line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

[[noreturn]] void fail_range(std::size_t line_no, const std::string& what) {
  throw ValidationError("line " + std::to_string(line_no) + ": " + what);
}

double parse_real(std::istringstream& in, std::size_t line_no,
                  const char* what) {
  double v;
  if (!(in >> v) || !std::isfinite(v)) {
    fail_parse(line_no, std::string("expected a real number for ") + what);
  }
  return v;
}

std::uint32_t parse_index(std::istringstream& in, std::size_t line_no,
                          std::uint32_t modes) {
  long long v;
  if (!(in >> v)) fail_parse(line_no, "expected a mode index");
  if (v < 1 || static_cast<std::uint64_t>(v) > modes) {
    fail_range(line_no,
               "mode index " + std::to_string(v) + " out of range 1.." +
                   std::to_string(modes));
  }
  return static_cast<std::uint32_t>(v);
}

void expect_end(std::istringstream& in, std::size_t line_no) {
  std::string rest;
  if (in >> rest) fail_parse(line_no, "unexpected trailing token '" + rest +
                                          "'");
}

}  // namespace

IntegralTable IntegralTable::parse(std::istream& in) {
  IntegralTable t;
  std::string line;
  std::size_t line_no = 0;
  bool saw_format = false;
  bool saw_modes = false;

  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string keyword;
    if (!(ls >> keyword)) continue;

    if (!saw_format) {
      std::string name;
      int version = 0;
      if (keyword != "format" || !(ls >> name >> version) ||
          name != "molint" || version != 1) {
        fail_parse(line_no, "expected header 'format molint 1'");
      }
      expect_end(ls, line_no);
      saw_format = true;
      continue;
    }

    if (keyword == "modes") {
      long long m;
      if (!(ls >> m) || m < 1 || m > 64) {
        fail_parse(line_no, "modes must be an integer in 1..64");
      }
      expect_end(ls, line_no);
      t.modes_ = static_cast<std::uint32_t>(m);
      saw_modes = true;
      continue;
    }
    if (keyword == "two_body_scale") {
      t.two_body_scale_ = parse_real(ls, line_no, "two_body_scale");
      expect_end(ls, line_no);
      continue;
    }
    if (keyword == "constant") {
      t.constant_ = parse_real(ls, line_no, "constant");
      expect_end(ls, line_no);
      continue;
    }
    if (keyword == "metadata") {
      std::string rest;
      std::getline(ls, rest);
      if (!rest.empty() && rest.front() == ' ') rest.erase(0, 1);
      if (!t.metadata_.empty()) t.metadata_ += '\n';
      t.metadata_ += rest;
      continue;
    }
    if (keyword == "1body") {
      if (!saw_modes) fail_parse(line_no, "'1body' before 'modes'");
      const auto i = parse_index(ls, line_no, t.modes_);
      const auto j = parse_index(ls, line_no, t.modes_);
      const double v = parse_real(ls, line_no, "1body value");
      expect_end(ls, line_no);
      auto key = std::make_pair(i, j);
      auto mirror = std::make_pair(j, i);
      auto it = t.one_body_map_.find(key);
      if (it != t.one_body_map_.end() && it->second != v) {
        fail_range(line_no, "conflicting one-body value for (" +
                                std::to_string(i) + "," + std::to_string(j) +
                                "): Hermitian symmetry requires h_ij = h_ji");
      }
      t.one_body_entries_.push_back({i, j, v});
      t.one_body_map_[key] = v;
      t.one_body_map_[mirror] = v;
      continue;
    }
    if (keyword == "2body") {
      if (!saw_modes) fail_parse(line_no, "'2body' before 'modes'");
      const auto i = parse_index(ls, line_no, t.modes_);
      const auto j = parse_index(ls, line_no, t.modes_);
      const auto k = parse_index(ls, line_no, t.modes_);
      const auto l = parse_index(ls, line_no, t.modes_);
      const double v = parse_real(ls, line_no, "2body value");
      expect_end(ls, line_no);
      t.two_body_entries_.push_back({i, j, k, l, v});
      continue;
    }
    fail_parse(line_no, "unknown keyword '" + keyword + "'");
  }

  if (!saw_format) throw ParseError("empty input: missing 'format molint 1'");
  if (!saw_modes) throw ParseError("missing 'modes' declaration");
  return t;
}

IntegralTable IntegralTable::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open integral file '" + path + "'");
  return parse(in);
}

void IntegralTable::serialize(std::ostream& out) const {
  const int digits = std::numeric_limits<double>::max_digits10;
  out.precision(digits);
  out << "format molint 1\n";
  out << "modes " << modes_ << "\n";
  if (two_body_scale_ != 1.0) out << "two_body_scale " << two_body_scale_
                                  << "\n";
  if (constant_ != 0.0) out << "constant " << constant_ << "\n";
  std::istringstream meta(metadata_);
  std::string meta_line;
  while (std::getline(meta, meta_line)) out << "metadata " << meta_line
                                            << "\n";
  for (const auto& e : one_body_entries_) {
    out << "1body " << e.i << ' ' << e.j << ' ' << e.value << "\n";
  }
  for (const auto& e : two_body_entries_) {
    out << "2body " << e.i << ' ' << e.j << ' ' << e.k << ' ' << e.l << ' '
        << e.value << "\n";
  }
}

double IntegralTable::one_body(std::uint32_t i, std::uint32_t j) const {
  auto it = one_body_map_.find({i, j});
  return it == one_body_map_.end() ? 0.0 : it->second;
}

double IntegralTable::two_body(std::uint32_t i, std::uint32_t j,
                               std::uint32_t k, std::uint32_t l) const {
  double sum = 0.0;
  for (const auto& e : two_body_entries_) {
    if (e.i == i && e.j == j && e.k == k && e.l == l) sum += e.value;
  }
  return sum;
}

FermionOperator build_molecular_hamiltonian(const IntegralTable& table) {
  FermionOperator H(table.modes());
  if (table.constant() != 0.0) {
    H.add({table.constant(), {}});
  }
  // Mirrored one-body map: both (i,j) and (j,i) for off-diagonal entries,
  // iterated in deterministic order.
  std::map<std::pair<std::uint32_t, std::uint32_t>, double> one_body;
  for (const auto& e : table.one_body_entries()) {
    one_body[{e.i, e.j}] = e.value;
    one_body[{e.j, e.i}] = e.value;
  }
  for (const auto& [ij, v] : one_body) {
    H.add({v, {{ij.first, true}, {ij.second, false}}});
  }
  for (const auto& e : table.two_body_entries()) {
    H.add({table.two_body_scale() * e.value,
           {{e.i, true}, {e.j, true}, {e.k, false}, {e.l, false}}});
  }
  if (!H.is_hermitian()) {
    throw ValidationError(
        "assembled Hamiltonian is not Hermitian: two-body entries lack "
        "their conjugate partners");
  }
  return H;
}

}  // namespace f2q
