// Copyright 2026 The dcsm Authors
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

#ifndef DCSM_ERRORS_HPP
#define DCSM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dcsm {

// Parameter validation failures throw std::invalid_argument and arithmetic
// domain failures (log of zero, division by the zero polynomial) throw
// std::domain_error. The two types below cover the remaining cases.

/// A construction postcondition did not hold. Indicates a bug or a broken
/// mathematical assumption, never bad user input.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

/// Malformed or inconsistent data read from a file.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dcsm

#endif  // DCSM_ERRORS_HPP
