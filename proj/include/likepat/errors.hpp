// Copyright 2026 The likepat Authors
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

#ifndef LIKEPAT_ERRORS_HPP_
#define LIKEPAT_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace likepat {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed surface syntax (pattern, expression, DIMACS, machine file).
// `position` is a zero-based offset into the offending input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// An operation that enumerates alternatives would produce more than the
// configured number of atoms.
class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t required, std::size_t cap)
      : Error("explosion cap exceeded: " + std::to_string(required) + " atoms required, cap is " +
              std::to_string(cap)),
        required_(required),
        cap_(cap) {}

  std::size_t required() const { return required_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t required_;
  std::size_t cap_;
};

// A state-space search ran out of its state budget before reaching a verdict.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::size_t explored, std::size_t budget)
      : Error("search budget exceeded after " + std::to_string(explored) + " states (budget " +
              std::to_string(budget) + ")"),
        explored_(explored) {}

  std::size_t explored() const { return explored_; }

 private:
  std::size_t explored_;
};

}  // namespace likepat

#endif  // LIKEPAT_ERRORS_HPP_
