// Copyright 2026 The Authors.
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

#ifndef MATBANDIT_ERRORS_HPP_
#define MATBANDIT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace matbandit {

// Malformed caller input: bad indices, out-of-range parameters, unparsable
// files, invalid configs.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A documented precondition was violated (e.g. a dependent set passed where
// an independent one is required, an uninitialized bandit state).
class ContractViolation : public std::runtime_error {
 public:
  explicit ContractViolation(const std::string& what)
      : std::runtime_error(what) {}
};

// Semi-bandit feedback does not cover exactly the chosen basis.
class FeedbackMismatch : public ContractViolation {
 public:
  explicit FeedbackMismatch(const std::string& what)
      : ContractViolation(what) {}
};

// An internal invariant that holds for every true matroid failed. Seeing
// this means the structure under test violates the matroid axioms (or the
// library has a bug); it is kept distinct so tests can detect it.
class AxiomViolation : public std::runtime_error {
 public:
  explicit AxiomViolation(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace matbandit

#endif  // MATBANDIT_ERRORS_HPP_
