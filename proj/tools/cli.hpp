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
#include <string>
#include <vector>

namespace f2q::cli {

enum class Transform { JW, BK, BKSF };
enum class OrderingMode { Magnitude, Random, Both };

struct RunConfig {
  std::string input_path;
  Transform transform = Transform::JW;
  double time = 1.0;
  int order = 1;
  std::vector<int> steps;  // default 1..11
  OrderingMode orderings = OrderingMode::Both;
  std::uint32_t random_count = 1000;
  std::uint64_t seed = 42;
  std::string output_path = "trotter_scan.csv";
  double drop_tolerance = 1e-12;
};

/// Parses "a..b" or a comma list into step counts.
std::vector<int> parse_steps(const std::string& text);

int run_transform(const RunConfig& cfg, std::ostream& out);
int run_gatecount(const RunConfig& cfg, std::ostream& out,
                  const std::string& emit_path);
int run_stabilizers(const RunConfig& cfg, std::ostream& out);
int run_groundstate(const RunConfig& cfg, std::ostream& out);
int run_trotter_scan(const RunConfig& cfg, std::ostream& out);

/// Full argv entry point; maps errors onto exit codes 1 (parse),
/// 2 (validation), 3 (numeric).
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace f2q::cli
