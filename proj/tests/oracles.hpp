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

// Test-only oracles and generators. Nothing here calls into the matcher or
// the automata under test, except where a helper explicitly takes one of
// them as the thing to compare.

#ifndef LIKEPAT_TESTS_ORACLES_HPP_
#define LIKEPAT_TESTS_ORACLES_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "likepat/expression.hpp"
#include "likepat/pattern.hpp"
#include "likepat/reductions.hpp"

namespace likepat::testing {

Alphabet chars(const std::string& s);
Pattern pat(const std::string& s);
Text txt(const std::string& s);

// Calls `fn` on every text over `sigma` of length 0..max_len, shortest
// first, in alphabet order within a length.
void for_each_text(const Alphabet& sigma, std::size_t max_len,
                   const std::function<void(const Text&)>& fn);

// Every pattern of exactly `size` tokens over sigma's literals, `_` and `%`.
void for_each_pattern(const Alphabet& sigma, std::size_t size,
                      const std::function<void(const Pattern&)>& fn);

// Independent full-string matcher: plain recursive backtracking on the
// token list.
bool backtrack_match(const Pattern& p, const Text& t);

// Matches a classical regular expression as produced by to_classical_regex
// (symbols, <token>, ε, +, *, parentheses, juxtaposition).
bool regex_match(const std::string& regex, const Text& t);

// Satisfying assignment by enumerating all 2^n assignments.
std::optional<std::vector<bool>> brute_force_sat(const Cnf& f);

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }
  bool coin() { return below(2) == 1; }

  Pattern pattern(const Alphabet& sigma, std::size_t size);
  Text text(const Alphabet& sigma, std::size_t len);
  // Random expression with `atoms` atoms, each of at most `max_pattern`
  // tokens; negations only when `allow_not`.
  LikeExpression expression(const Alphabet& sigma, std::size_t atoms, std::size_t max_pattern,
                            bool allow_not);
  Cnf cnf(std::size_t n_vars, std::size_t n_clauses);

 private:
  std::mt19937_64 rng_;
};

}  // namespace likepat::testing

#endif  // LIKEPAT_TESTS_ORACLES_HPP_
