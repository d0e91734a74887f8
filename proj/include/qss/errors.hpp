// Copyright 2026 The qss Authors
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

namespace qss {

/// Matrix or register dimension exceeds the supported maximum.
class SizeError : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// Operand shapes do not agree (dimension mismatch, wrong register layout).
class ShapeError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A real parameter lies outside its admissible range.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// An operator violates a structural contract (non-unitary, not CPTP,
/// incomplete POVM).
class ContractError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Requested collapse onto an outcome of (numerically) zero probability.
class DegenerateError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Unknown channel name.
class CatalogueError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

} // namespace qss
