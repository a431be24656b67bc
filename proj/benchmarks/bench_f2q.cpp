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

#include <benchmark/benchmark.h>

#include <random>

#include "f2q/integral_table.hpp"
#include "f2q/ordering.hpp"
#include "f2q/transforms.hpp"
#include "f2q/trotter.hpp"

#ifndef F2Q_DATA_DIR
#error "F2Q_DATA_DIR must point at the bundled data directory"
#endif

namespace {

f2q::FermionOperator load_h2() {
  return f2q::build_molecular_hamiltonian(f2q::IntegralTable::parse_file(
      std::string(F2Q_DATA_DIR) + "/h2_sto3g.molint"));
}

void BM_StringMultiply(benchmark::State& state) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> letter(0, 3);
  std::vector<f2q::PauliString> strings;
  for (int k = 0; k < 64; ++k) {
    f2q::PauliString s(16);
    for (std::uint32_t q = 1; q <= 16; ++q) {
      s.set(q, static_cast<f2q::Pauli>(letter(rng)));
    }
    strings.push_back(s);
  }
  std::size_t k = 0;
  for (auto _ : state) {
    const auto product =
        f2q::multiply_strings(strings[k & 63], strings[(k + 1) & 63]);
    benchmark::DoNotOptimize(product.phase);
    ++k;
  }
}
BENCHMARK(BM_StringMultiply);

void BM_JordanWignerH2(benchmark::State& state) {
  const auto H = load_h2();
  for (auto _ : state) {
    benchmark::DoNotOptimize(f2q::jordan_wigner(H));
  }
}
BENCHMARK(BM_JordanWignerH2);

void BM_BksfTransformH2(benchmark::State& state) {
  const auto H = load_h2();
  const auto g = f2q::build_mode_graph(H);
  for (auto _ : state) {
    benchmark::DoNotOptimize(f2q::bksf_transform(H, g));
  }
}
BENCHMARK(BM_BksfTransformH2);

void BM_TrotterStep(benchmark::State& state) {
  const auto op = f2q::jordan_wigner(load_h2());
  const auto terms = f2q::magnitude_ordering(op);
  const double constant = f2q::identity_coefficient(op);
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const auto plan = f2q::make_trotter_plan(terms, constant, 1, steps, 1.0);
    benchmark::DoNotOptimize(f2q::trotter_evolution(plan));
  }
}
BENCHMARK(BM_TrotterStep)->Arg(1)->Arg(4)->Arg(11);

void BM_TrotterEnergy(benchmark::State& state) {
  const auto op = f2q::jordan_wigner(load_h2());
  const auto gs = f2q::ground_state(op);
  const auto u = f2q::trotter_evolution(f2q::make_trotter_plan(
      f2q::magnitude_ordering(op), f2q::identity_coefficient(op), 1, 3,
      1.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(f2q::trotter_energy(u, 1.0, gs.state));
  }
}
BENCHMARK(BM_TrotterEnergy);

}  // namespace

BENCHMARK_MAIN();
