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

#include "f2q/fermion_op.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace f2q {

std::string render_factors(const std::vector<LadderOp>& factors) {
  if (factors.empty()) return "1";
  std::ostringstream out;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k) out << ' ';
    out << 'a' << (factors[k].dagger ? "+" : "") << '_' << factors[k].mode;
  }
  return out.str();
}

FermionOperator::FermionOperator(std::uint32_t modes) : modes_(modes) {
  if (modes == 0) {
    throw ValidationError("fermionic operator needs at least one mode");
  }
}

void FermionOperator::add(const FermionTerm& term) {
  for (const auto& f : term.factors) {
    if (f.mode < 1 || f.mode > modes_) {
      throw ValidationError("mode index " + std::to_string(f.mode) +
                            " out of range 1.." + std::to_string(modes_));
    }
  }
  auto [it, inserted] = terms_.try_emplace(term.factors, term.coefficient);
  if (!inserted) {
    it->second += term.coefficient;
    if (it->second == 0.0) terms_.erase(it);
  }
}

double FermionOperator::coefficient(
    const std::vector<LadderOp>& factors) const {
  auto it = terms_.find(factors);
  return it == terms_.end() ? 0.0 : it->second;
}

std::vector<FermionTerm> FermionOperator::terms() const {
  std::vector<FermionTerm> out;
  out.reserve(terms_.size());
  for (const auto& [f, c] : terms_) out.push_back({c, f});
  return out;
}

FermionOperator FermionOperator::adjoint() const {
  FermionOperator out(modes_);
  for (const auto& [f, c] : terms_) {
    std::vector<LadderOp> rev(f.rbegin(), f.rend());
    for (auto& op : rev) op.dagger = !op.dagger;
    out.add({c, rev});
  }
  return out;
}

bool FermionOperator::is_hermitian(double tol) const {
  const FermionOperator adj = adjoint();
  std::set<std::vector<LadderOp>> keys;
  for (const auto& [f, c] : terms_) keys.insert(f);
  for (const auto& [f, c] : adj.terms_) keys.insert(f);
  for (const auto& f : keys) {
    if (std::abs(coefficient(f) - adj.coefficient(f)) > tol) return false;
  }
  return true;
}

std::string to_string(OperatorClass c) {
  switch (c) {
    case OperatorClass::Number: return "Number";
    case OperatorClass::CoulombExchange: return "CoulombExchange";
    case OperatorClass::Excitation: return "Excitation";
    case OperatorClass::NumberExcitation: return "NumberExcitation";
    case OperatorClass::DoubleExcitation: return "DoubleExcitation";
    case OperatorClass::PairCreation: return "PairCreation";
    case OperatorClass::Unsupported: return "Unsupported";
  }
  return "?";
}

namespace {

bool daggers_are(const std::vector<LadderOp>& f,
                 std::initializer_list<bool> pattern) {
  if (f.size() != pattern.size()) return false;
  std::size_t k = 0;
  for (bool d : pattern) {
    if (f[k++].dagger != d) return false;
  }
  return true;
}

bool factors_equal(const std::vector<LadderOp>& a,
                   const std::vector<LadderOp>& b) {
  return a == b;
}

// Expected Hermitian partner factor sequences for the paired patterns.
std::optional<std::vector<LadderOp>> partner_pattern(
    const std::vector<LadderOp>& f) {
  if (daggers_are(f, {true, false}) && f[0].mode != f[1].mode) {
    return std::vector<LadderOp>{{f[1].mode, true}, {f[0].mode, false}};
  }
  if (daggers_are(f, {true, true}) && f[0].mode != f[1].mode) {
    return std::vector<LadderOp>{{f[0].mode, false}, {f[1].mode, false}};
  }
  if (daggers_are(f, {true, true, false, false})) {
    const auto i = f[0].mode, j = f[1].mode, k = f[2].mode, l = f[3].mode;
    if (j == k && i != l && j != i && j != l) {
      return std::vector<LadderOp>{
          {l, true}, {j, true}, {j, false}, {i, false}};
    }
    std::set<std::uint32_t> distinct{i, j, k, l};
    if (distinct.size() == 4) {
      return std::vector<LadderOp>{
          {l, true}, {k, true}, {j, false}, {i, false}};
    }
  }
  return std::nullopt;
}

}  // namespace

TermClass classify_term(const FermionTerm& t, const FermionTerm* partner) {
  const auto& f = t.factors;
  if (f.size() % 2 == 1) {
    return {OperatorClass::Unsupported, true};
  }
  if (daggers_are(f, {true, false}) && f[0].mode == f[1].mode) {
    return {OperatorClass::Number, false};
  }
  if (daggers_are(f, {true, true, false, false}) && f[0].mode == f[3].mode &&
      f[1].mode == f[2].mode && f[0].mode != f[1].mode) {
    return {OperatorClass::CoulombExchange, false};
  }
  auto expected = partner_pattern(f);
  if (expected && partner && factors_equal(partner->factors, *expected)) {
    if (f.size() == 2 && f[1].dagger) return {OperatorClass::PairCreation,
                                              false};
    if (f.size() == 2) return {OperatorClass::Excitation, false};
    if (f[1].mode == f[2].mode) return {OperatorClass::NumberExcitation,
                                        false};
    return {OperatorClass::DoubleExcitation, false};
  }
  return {OperatorClass::Unsupported, false};
}

ClassifiedOperator classify_operator(const FermionOperator& H) {
  ClassifiedOperator out;
  const auto all = H.terms();
  std::set<std::vector<LadderOp>> consumed;

  auto find_term = [&](const std::vector<LadderOp>& f) -> const FermionTerm* {
    for (const auto& t : all) {
      if (t.factors == f) return &t;
    }
    return nullptr;
  };

  for (const auto& t : all) {
    if (consumed.count(t.factors)) continue;
    consumed.insert(t.factors);

    if (t.factors.empty()) {
      out.constant += t.coefficient;
      continue;
    }

    Interaction rec;
    rec.coefficient = t.coefficient;
    rec.description = render_factors(t.factors);

    const FermionTerm* partner = nullptr;
    if (auto expected = partner_pattern(t.factors)) {
      partner = find_term(*expected);
      // A partner with a mismatched coefficient is not a Table-pattern
      // pair; leave it unconsumed so it reports on its own.
      if (partner &&
          std::abs(partner->coefficient - t.coefficient) > 1e-12) {
        partner = nullptr;
      }
      if (partner) consumed.insert(partner->factors);
    }

    const TermClass cls = classify_term(t, partner);
    rec.cls = cls.tag;
    rec.odd_parity = cls.odd_parity;

    const auto& f = t.factors;
    switch (cls.tag) {
      case OperatorClass::Number:
        rec.modes = {f[0].mode, 0, 0, 0};
        break;
      case OperatorClass::CoulombExchange:
      case OperatorClass::Excitation:
      case OperatorClass::PairCreation:
        rec.modes = {f[0].mode, f[1].mode, 0, 0};
        break;
      case OperatorClass::NumberExcitation:
        rec.modes = {f[0].mode, f[1].mode, f[3].mode, 0};
        break;
      case OperatorClass::DoubleExcitation:
        rec.modes = {f[0].mode, f[1].mode, f[2].mode, f[3].mode};
        break;
      case OperatorClass::Unsupported:
        break;
    }
    out.interactions.push_back(std::move(rec));
  }
  return out;
}

}  // namespace f2q
