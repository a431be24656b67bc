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

#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "f2q/circuit.hpp"
#include "f2q/integral_table.hpp"
#include "f2q/ordering.hpp"
#include "f2q/transforms.hpp"
#include "f2q/trotter.hpp"

namespace f2q::cli {

namespace {

struct Problem {
  FermionOperator hamiltonian;
  PauliOperator qubit_op;
  std::optional<ModeGraph> graph;  // BKSF only
};

Problem load_problem(const RunConfig& cfg) {
  const auto table = IntegralTable::parse_file(cfg.input_path);
  auto H = build_molecular_hamiltonian(table);
  switch (cfg.transform) {
    case Transform::JW:
      return {H, canonicalize(jordan_wigner(H), cfg.drop_tolerance), {}};
    case Transform::BK:
      return {H, canonicalize(bravyi_kitaev(H), cfg.drop_tolerance), {}};
    case Transform::BKSF: {
      auto g = build_mode_graph(H);
      auto op = canonicalize(bksf_transform(H, g), cfg.drop_tolerance);
      return {H, std::move(op), std::move(g)};
    }
  }
  throw ValidationError("unknown transform");
}

std::string format_energy(double e) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12f", e);
  return buf;
}

std::string format_csv_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.15e", v);
  return buf;
}

}  // namespace

std::vector<int> parse_steps(const std::string& text) {
  std::vector<int> out;
  auto parse_int = [&](const std::string& tok) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw ParseError("invalid step count '" + tok + "'");
    }
    if (pos != tok.size() || v < 1) {
      throw ParseError("invalid step count '" + tok + "'");
    }
    return v;
  };
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const int lo = parse_int(text.substr(0, dots));
    const int hi = parse_int(text.substr(dots + 2));
    if (hi < lo) throw ParseError("step range is empty: " + text);
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto tok = text.substr(start, comma == std::string::npos
                                            ? std::string::npos
                                            : comma - start);
    out.push_back(parse_int(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int run_transform(const RunConfig& cfg, std::ostream& out) {
  const auto problem = load_problem(cfg);
  out << render(problem.qubit_op) << '\n';
  return 0;
}

int run_gatecount(const RunConfig& cfg, std::ostream& out,
                  const std::string& emit_path) {
  const auto problem = load_problem(cfg);
  const auto profile = gate_count(problem.qubit_op);
  out << "h " << profile.h << '\n';
  out << "rx " << profile.rx << '\n';
  out << "rz " << profile.rz << '\n';
  out << "cnot " << profile.cnot << '\n';
  out << "total " << profile.total() << '\n';
  if (!emit_path.empty()) {
    std::ofstream file(emit_path);
    if (!file) throw ParseError("cannot open '" + emit_path + "'");
    for (const auto& term : non_identity_terms(problem.qubit_op)) {
      file << "# " << render_term(term) << '\n';
      emit_circuit(file, compile_pauli_rotation(term, cfg.time));
    }
  }
  return 0;
}

int run_stabilizers(const RunConfig& cfg, std::ostream& out) {
  const auto table = IntegralTable::parse_file(cfg.input_path);
  const auto H = build_molecular_hamiltonian(table);
  const auto g = build_mode_graph(H);
  out << "modes " << g.vertex_count() << '\n';
  g.dump(out);
  const auto stabs = build_stabilizers(g);
  for (const auto& loop : stabs.loops) {
    out << "loop";
    for (auto v : loop.vertices) out << ' ' << v;
    out << '\n';
  }
  for (const auto& op : stabs.operators) {
    out << "stabilizer " << render(op) << '\n';
  }
  const auto vac = vacuum_state(g, stabs);
  for (Eigen::Index k = 0; k < vac.size(); ++k) {
    if (std::abs(vac(k)) < 1e-12) continue;
    std::string bits(g.edge_count(), '0');
    for (std::uint32_t q = 1; q <= g.edge_count(); ++q) {
      if (k & (1ll << (q - 1))) bits[g.edge_count() - q] = '1';
    }
    out << "vacuum " << bits << ' ' << format_energy(vac(k).real()) << ' '
        << format_energy(vac(k).imag()) << '\n';
  }
  return 0;
}

int run_groundstate(const RunConfig& cfg, std::ostream& out) {
  const auto problem = load_problem(cfg);
  GroundState gs;
  if (cfg.transform == Transform::BKSF) {
    const auto stabs = build_stabilizers(*problem.graph);
    const auto projector =
        code_space_projector(stabs, problem.graph->edge_count());
    gs = ground_state(problem.qubit_op, &projector);
    out << "code_space_dimension "
        << (1ll << problem.graph->edge_count()) /
               (1ll << stabs.operators.size())
        << '\n';
  } else {
    gs = ground_state(problem.qubit_op);
  }
  out << "ground_energy_hartree " << format_energy(gs.energy) << '\n';
  return 0;
}

int run_trotter_scan(const RunConfig& cfg, std::ostream& out) {
  const auto problem = load_problem(cfg);
  const auto& op = problem.qubit_op;

  std::vector<OrderingRecord> orderings;
  if (cfg.orderings != OrderingMode::Random) {
    orderings.push_back(magnitude_record(op, cfg.seed));
  }
  if (cfg.orderings != OrderingMode::Magnitude) {
    auto randoms = random_orderings(op, cfg.random_count, cfg.seed);
    orderings.insert(orderings.end(), randoms.begin(), randoms.end());
  }

  GroundState gs;
  std::optional<DenseMatrix> basis;
  if (cfg.transform == Transform::BKSF) {
    const auto projector = code_space_projector(
        build_stabilizers(*problem.graph), problem.graph->edge_count());
    basis = orthonormal_range(projector);
    gs = ground_state(op, &projector);
  } else {
    gs = ground_state(op);
  }

  const auto steps = cfg.steps.empty()
                         ? std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}
                         : cfg.steps;
  const auto result =
      ordering_scan(op, std::move(orderings), cfg.time, steps, gs.state,
                    basis ? &*basis : nullptr, cfg.order);

  std::ofstream csv(cfg.output_path);
  if (!csv) throw ParseError("cannot open '" + cfg.output_path + "'");
  csv << "ordering_id,seed,order,steps,energy_hartree,abs_error_hartree\n";
  for (const auto& rec : result.records) {
    for (std::size_t k = 0; k < steps.size(); ++k) {
      csv << rec.id << ',' << rec.seed << ',' << cfg.order << ','
          << steps[k] << ',' << format_csv_double(rec.energies[k]) << ','
          << format_csv_double(rec.errors[k]) << '\n';
    }
  }

  out << "rng mt19937_64 seed " << cfg.seed << '\n';
  out << "orderings " << result.records.size() << '\n';
  out << "reference_energy_hartree " << format_energy(result.reference_energy)
      << '\n';
  const auto& best = result.records.front();
  out << "best_ordering " << best.id << '\n';
  out << "best_errors";
  for (double e : best.errors) out << ' ' << format_csv_double(e);
  out << '\n';
  const auto terms = non_identity_terms(op);
  out << "best_sequence";
  for (auto k : best.permutation) out << ' ' << terms[k].string.letters();
  out << '\n';
  out << "csv " << cfg.output_path << '\n';
  return 0;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"fermion-to-qubit transforms, stabilizers, and Trotter "
               "analysis for second-quantized Hamiltonians"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string steps_text;
  std::string orderings_text = "both";
  std::string transform_text;
  std::string emit_path;

  const std::map<std::string, Transform> transform_names{
      {"jw", Transform::JW}, {"bk", Transform::BK},
      {"bksf", Transform::BKSF}};

  auto add_common = [&](CLI::App* sub, bool needs_transform) {
    sub->add_option("input", cfg.input_path, "MOLINT integral file")
        ->required();
    if (needs_transform) {
      sub->add_option("--transform", transform_text,
                      "fermion-to-qubit mapping: jw, bk, or bksf")
          ->required()
          ->check(CLI::IsMember({"jw", "bk", "bksf"}));
    }
    sub->add_option("--drop-tol", cfg.drop_tolerance,
                    "magnitude below which operator terms are dropped");
  };

  auto* transform_cmd =
      app.add_subcommand("transform", "print the qubit operator");
  add_common(transform_cmd, true);

  auto* gatecount_cmd = app.add_subcommand(
      "gatecount", "single-Trotter-step gate totals");
  add_common(gatecount_cmd, true);
  gatecount_cmd->add_option("--emit-circuits", emit_path,
                            "write per-term gate sequences to this file");

  auto* stabilizers_cmd = app.add_subcommand(
      "stabilizers", "interaction graph, loops, stabilizers, vacuum");
  add_common(stabilizers_cmd, false);

  auto* groundstate_cmd = app.add_subcommand(
      "groundstate", "exact ground energy (code-space restricted for bksf)");
  add_common(groundstate_cmd, true);

  auto* scan_cmd = app.add_subcommand(
      "trotter-scan", "Trotter energy errors across term orderings");
  add_common(scan_cmd, true);
  scan_cmd->add_option("--time", cfg.time, "evolution time (atomic units)");
  scan_cmd->add_option("--order", cfg.order, "Trotter-Suzuki order 1..4");
  scan_cmd->add_option("--steps", steps_text,
                       "step counts: 'a..b' or comma list (default 1..11)");
  scan_cmd->add_option("--orderings", orderings_text,
                       "magnitude, random, or both")
      ->check(CLI::IsMember({"magnitude", "random", "both"}));
  scan_cmd->add_option("--count", cfg.random_count,
                       "number of random orderings");
  scan_cmd->add_option("--seed", cfg.seed, "random-ordering seed");
  scan_cmd->add_option("--output", cfg.output_path, "CSV output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e, out, err);  // --help
    }
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (!transform_text.empty()) cfg.transform = transform_names.at(
        transform_text);
    if (!steps_text.empty()) cfg.steps = parse_steps(steps_text);
    if (orderings_text == "magnitude") cfg.orderings =
        OrderingMode::Magnitude;
    if (orderings_text == "random") cfg.orderings = OrderingMode::Random;
    if (cfg.random_count < 1) {
      throw ValidationError("--count must be at least 1");
    }

    if (transform_cmd->parsed()) return run_transform(cfg, out);
    if (gatecount_cmd->parsed()) return run_gatecount(cfg, out, emit_path);
    if (stabilizers_cmd->parsed()) return run_stabilizers(cfg, out);
    if (groundstate_cmd->parsed()) return run_groundstate(cfg, out);
    if (scan_cmd->parsed()) return run_trotter_scan(cfg, out);
    err << "error: no subcommand\n";
    return 1;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return 2;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace f2q::cli
