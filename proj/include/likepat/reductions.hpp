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

// Generators for the majority pattern and the 3SAT-to-monotone-expression
// reduction.

#ifndef LIKEPAT_REDUCTIONS_HPP_
#define LIKEPAT_REDUCTIONS_HPP_

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "likepat/expression.hpp"
#include "likepat/pattern.hpp"

namespace likepat {

// `%` followed by ceil((n+1)/2) copies of `1%`. Over {0,1} a text of length
// n matches iff more than half of its symbols are 1. Throws Error if n == 0.
Pattern encode_majority(std::size_t n);

struct CnfLiteral {
  std::size_t variable = 1;  // 1-based
  bool negated = false;

  friend bool operator==(const CnfLiteral&, const CnfLiteral&) = default;
};

using CnfClause = std::array<CnfLiteral, 3>;

struct Cnf {
  std::size_t n_vars = 1;
  std::vector<CnfClause> clauses;

  // Throws Error unless n_vars >= 1 and every variable is in 1..n_vars.
  void validate() const;
  bool satisfied_by(const std::vector<bool>& assignment) const;
};

// DIMACS "p cnf <vars> <clauses>" with exactly three literals per clause.
// Comment lines start with 'c'. Clauses may span lines.
Cnf parse_dimacs(std::string_view text);
std::string to_dimacs(const Cnf& f);

// "x<i>" for a positive literal, "~x<i>" for a negated one.
Symbol literal_symbol(const CnfLiteral& l);

struct Encoding {
  LikeExpression expression;
  Alphabet alphabet;
};

// AND of: n wildcards `_`; per variable `%xi%` OR `%~xi%`; per clause the OR
// of `%l%` over its three literals. The alphabet lists x1..xn, then
// ~x1..~xn.
Encoding encode_3sat(const Cnf& f);

// Reads one literal per variable from a witness of encode_3sat; nullopt if
// the text is not of that shape.
std::optional<std::vector<bool>> decode_assignment(const Text& witness, const Cnf& f);

}  // namespace likepat

#endif  // LIKEPAT_REDUCTIONS_HPP_
