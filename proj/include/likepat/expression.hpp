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

// Boolean combinations of LIKE conditions.
//
// Surface grammar (keywords are case-insensitive):
//
//   expr  := or
//   or    := and { "OR" and }
//   and   := unary { "AND" unary }
//   unary := "NOT" unary | "(" expr ")" | "LIKE" quoted
//
// `quoted` is a double-quoted pattern; inside the quotes `\"` stands for `"`
// and `\\` for `\`, any other backslash is kept verbatim. The LIKE escape
// character, if any, is declared out of band and applies to the unquoted
// pattern text.

#ifndef LIKEPAT_EXPRESSION_HPP_
#define LIKEPAT_EXPRESSION_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "likepat/pattern.hpp"

namespace likepat {

inline constexpr std::size_t kDefaultExplosionCap = 4096;

class LikeExpression {
 public:
  enum class Kind { kAtom, kNot, kAnd, kOr };

  static LikeExpression atom(Pattern p);
  static LikeExpression negation(LikeExpression e);
  // Nested connectives of the same kind are flattened and a single operand is
  // returned unchanged. Throws Error on an empty operand list.
  static LikeExpression conjunction(std::vector<LikeExpression> operands);
  static LikeExpression disjunction(std::vector<LikeExpression> operands);

  Kind kind() const { return kind_; }
  // Only meaningful for kAtom.
  const Pattern& pattern() const { return pattern_; }
  // One child for kNot, at least two for kAnd/kOr.
  const std::vector<LikeExpression>& children() const { return children_; }

  friend bool operator==(const LikeExpression&, const LikeExpression&) = default;

 private:
  LikeExpression(Kind kind, Pattern p, std::vector<LikeExpression> children)
      : kind_(kind), pattern_(std::move(p)), children_(std::move(children)) {}
  static LikeExpression connective(Kind kind, std::vector<LikeExpression> ops);

  Kind kind_;
  Pattern pattern_;
  std::vector<LikeExpression> children_;
};

// Total number of pattern tokens over all atoms.
std::size_t expression_size(const LikeExpression& e);
std::size_t atom_count(const LikeExpression& e);

LikeExpression parse_expression(std::string_view text, std::optional<char> escape = std::nullopt,
                                SyntaxMode mode = SyntaxMode::kChars);
std::string render_expression(const LikeExpression& e, std::optional<char> escape = std::nullopt,
                              SyntaxMode mode = SyntaxMode::kChars);

bool evaluate(const LikeExpression& e, const Text& t);
bool is_monotone(const LikeExpression& e);

// Replaces every `_` by each alphabet symbol in turn. Returns a single atom
// when `p` has no `_`. Throws CapExceeded when |sigma|^u > cap.
LikeExpression expand_underscores(const Pattern& p, const Alphabet& sigma,
                                  std::size_t cap = kDefaultExplosionCap);

struct SignedAtom {
  Pattern pattern;
  bool positive = true;
  bool anchored_start = true;
  bool anchored_end = true;

  friend bool operator==(const SignedAtom&, const SignedAtom&) = default;
};

// Disjunction of conjunctions of signed `_`-free atoms. No clauses means
// false; an empty clause means true.
struct Dnf {
  std::vector<std::vector<SignedAtom>> clauses;

  std::size_t atom_count() const;
  LikeExpression to_expression() const;
};

// Expands underscores, pushes negations onto atoms and distributes AND over
// OR. Throws CapExceeded when more than `cap` signed atoms would be produced.
Dnf to_dot_depth1_dnf(const LikeExpression& e, const Alphabet& sigma,
                      std::size_t cap = kDefaultExplosionCap);

// Distinct atom patterns in first-occurrence order.
std::vector<Pattern> distinct_atoms(const LikeExpression& e);

}  // namespace likepat

#endif  // LIKEPAT_EXPRESSION_HPP_
