// Copyright 2026 The Immunet Authors.
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

#ifndef IMMUNET_ERRORS_HPP
#define IMMUNET_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace immunet {

/// Malformed input text. Carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Unreadable file or a reference to a vertex label that does not exist.
class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A request exceeds a guard on problem size (subset enumeration,
/// dense matrix powers, per-round eigensolve counts).
class CapabilityError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An iterative eigensolve stopped at max_iter without reaching tolerance.
class ConvergenceError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace immunet

#endif  // IMMUNET_ERRORS_HPP
