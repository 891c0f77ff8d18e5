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

// Position-set automata for LIKE patterns and the breadth-first search over
// tuples of position sets that decides nonemptiness and equivalence of LIKE
// expressions.
//
// For a pattern of m tokens the positions are 0..m; position i means "the
// first i tokens have matched the text read so far". Sets are kept closed
// under advancing over `%` without consuming input, so a set has one
// canonical representation and position m is present exactly when the text
// read so far matches.

#ifndef LIKEPAT_AUTOMATA_HPP_
#define LIKEPAT_AUTOMATA_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "likepat/expression.hpp"
#include "likepat/pattern.hpp"

namespace likepat {

class PositionSet {
 public:
  PositionSet() = default;
  // An empty set over positions 0..positions-1.
  explicit PositionSet(std::size_t positions)
      : positions_(positions), words_((positions + 63) / 64, 0) {}

  std::size_t positions() const { return positions_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool empty() const;
  std::vector<std::size_t> elements() const;
  bool is_subset_of(const PositionSet& other) const;

  friend bool operator==(const PositionSet&, const PositionSet&) = default;

 private:
  std::size_t positions_ = 0;
  std::vector<std::uint64_t> words_;
};

class PatternNfa {
 public:
  explicit PatternNfa(Pattern p) : pattern_(std::move(p)) {}

  const Pattern& pattern() const { return pattern_; }
  std::size_t accepting() const { return pattern_.size(); }

  // Adds every position reachable through `%` tokens without consuming.
  PositionSet closure(PositionSet s) const;
  PositionSet initial() const;
  bool is_accepting(const PositionSet& s) const { return s.test(accepting()); }

 private:
  Pattern pattern_;
};

PatternNfa compile(const Pattern& p);
// One-symbol image of a closed set, closed again.
PositionSet nfa_step(const PatternNfa& n, const PositionSet& s, const Symbol& x);
bool nfa_accepts(const PatternNfa& n, const Text& t);

// Position sets of all distinct atoms of one or more expressions, packed
// into 64-bit words.
struct EvalState {
  std::vector<std::uint64_t> words;
  friend bool operator==(const EvalState&, const EvalState&) = default;
};

// The synchronous product of the position-set automata of every distinct
// atom in a list of expressions, specialised to one alphabet.
class ExpressionAutomaton {
 public:
  enum class Truth { kFalse, kTrue, kUnknown };

  ExpressionAutomaton(std::vector<LikeExpression> expressions, const Alphabet& sigma);
  ~ExpressionAutomaton();
  ExpressionAutomaton(ExpressionAutomaton&&) noexcept;
  ExpressionAutomaton& operator=(ExpressionAutomaton&&) noexcept;

  const Alphabet& alphabet() const { return sigma_; }
  std::size_t atom_count() const;

  EvalState initial() const;
  // `symbol` is an index into the alphabet.
  EvalState step(const EvalState& s, std::size_t symbol) const;

  // Value of expression `which` on the text that led to `s`.
  bool value(std::size_t which, const EvalState& s) const;
  // kTrue/kFalse when the value is the same for every extension of the text.
  Truth settled(std::size_t which, const EvalState& s) const;

  // Position set of atom `atom` (positions of its normalized pattern).
  PositionSet atom_positions(std::size_t atom, const EvalState& s) const;

 private:
  struct Impl;
  Alphabet sigma_;
  std::unique_ptr<Impl> impl_;
};

inline constexpr std::size_t kDefaultStateBudget = std::size_t{1} << 20;

struct SearchOptions {
  // Longest text considered. For a monotone expression in find_witness the
  // default is the expression size.
  std::optional<std::size_t> max_len;
  std::size_t state_budget = kDefaultStateBudget;
};

enum class Verdict { kFound, kExhaustedEquivalent, kExhaustedEmpty };

struct SearchOutcome {
  Verdict verdict = Verdict::kExhaustedEmpty;
  // Set iff verdict == kFound. Shortest, and first in alphabet order among
  // texts of that length.
  std::optional<Text> text;
  // Distinct states discovered.
  std::size_t explored = 0;
};

// Throws BudgetExceeded when more than options.state_budget states would be
// discovered.
SearchOutcome find_witness(const LikeExpression& e, const Alphabet& sigma,
                           const SearchOptions& options = {});
SearchOutcome find_separating_string(const LikeExpression& e1, const LikeExpression& e2,
                                     const Alphabet& sigma, const SearchOptions& options = {});
bool decide_equivalence(const LikeExpression& e1, const LikeExpression& e2, const Alphabet& sigma,
                        const SearchOptions& options = {});

}  // namespace likepat

#endif  // LIKEPAT_AUTOMATA_HPP_
