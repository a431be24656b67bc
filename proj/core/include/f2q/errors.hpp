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

#include <stdexcept>
#include <string>

namespace f2q {

/// Base class for all f2q errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (files, option syntax). CLI exit code 1.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Domain-contract violations: bad indices, dimension mismatches,
/// unsupported operator patterns, non-Hermitian data. CLI exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Numerical failures: degenerate overlap ties, annihilated projections,
/// empty restricted subspaces. CLI exit code 3.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace f2q
