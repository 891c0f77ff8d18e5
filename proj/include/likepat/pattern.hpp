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

// Core data model for SQL LIKE patterns: symbols, alphabets, pattern tokens,
// and the surface syntax.
//
// Symbols are opaque tokens rather than characters. Two surface syntaxes are
// supported:
//
//   * SyntaxMode::kChars  - every UTF-8 code point is one symbol, `%` and `_`
//                           are wildcards (plain SQL notation).
//   * SyntaxMode::kTokens - whitespace-separated symbol names; the tokens `%`
//                           and `_` are wildcards.
//
// In both modes an optional escape character forces a literal reading of the
// character (or token) that follows it.

#ifndef LIKEPAT_PATTERN_HPP_
#define LIKEPAT_PATTERN_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace likepat {

class Symbol {
 public:
  // Throws Error if `token` is empty.
  explicit Symbol(std::string token);

  const std::string& token() const { return token_; }

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;

 private:
  std::string token_;
};

// A sequence of symbols to be matched against patterns.
using Text = std::vector<Symbol>;

enum class SyntaxMode { kChars, kTokens };

class Alphabet {
 public:
  // Throws Error when `symbols` is empty or contains duplicates.
  explicit Alphabet(std::vector<Symbol> symbols);

  // One symbol per UTF-8 code point; whitespace is rejected.
  static Alphabet from_chars(std::string_view chars);
  // One symbol per non-blank line, surrounding whitespace trimmed.
  static Alphabet from_lines(std::istream& in);
  static Alphabet from_file(const std::string& path);

  const std::vector<Symbol>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  const Symbol& operator[](std::size_t i) const { return symbols_[i]; }

  bool contains(const Symbol& s) const { return index_.contains(s.token()); }
  std::optional<std::size_t> index_of(const Symbol& s) const;

  // Newline-terminated, one symbol per line.
  std::string to_lines() const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

 private:
  std::vector<Symbol> symbols_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct AnyOne {
  friend bool operator==(AnyOne, AnyOne) { return true; }
};
struct AnyString {
  friend bool operator==(AnyString, AnyString) { return true; }
};

using PatternToken = std::variant<Symbol, AnyOne, AnyString>;

inline bool is_literal(const PatternToken& t) { return std::holds_alternative<Symbol>(t); }
inline bool is_any_one(const PatternToken& t) { return std::holds_alternative<AnyOne>(t); }
inline bool is_any_string(const PatternToken& t) { return std::holds_alternative<AnyString>(t); }

// Whether `t` can consume the symbol `x` (literal equality or AnyOne).
// AnyString is handled separately by every caller and yields false here.
inline bool consumes(const PatternToken& t, const Symbol& x) {
  if (const auto* s = std::get_if<Symbol>(&t)) return *s == x;
  return is_any_one(t);
}

class Pattern {
 public:
  Pattern() = default;
  explicit Pattern(std::vector<PatternToken> tokens) : tokens_(std::move(tokens)) {}

  const std::vector<PatternToken>& tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }
  const PatternToken& operator[](std::size_t i) const { return tokens_[i]; }
  auto begin() const { return tokens_.begin(); }
  auto end() const { return tokens_.end(); }

  bool has_any_string() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  std::vector<PatternToken> tokens_;
};

struct LengthProfile {
  std::size_t min_length = 0;
  bool fixed_length = true;
  bool infinite = false;

  friend bool operator==(const LengthProfile&, const LengthProfile&) = default;
};

// Splits UTF-8 into code points. Throws ParseError on malformed input.
std::vector<std::string> split_utf8(std::string_view text);

Pattern parse_pattern(std::string_view text, std::optional<char> escape = std::nullopt,
                      SyntaxMode mode = SyntaxMode::kChars);

// Inverse of parse_pattern. Throws Error when a literal `%`/`_` (or the
// escape character itself) would need an escape and none is declared, or
// when a symbol cannot be written in the chosen mode.
std::string render_pattern(const Pattern& p, std::optional<char> escape = std::nullopt,
                           SyntaxMode mode = SyntaxMode::kChars);

Text parse_text(std::string_view text, SyntaxMode mode = SyntaxMode::kChars);
std::string render_text(const Text& t, SyntaxMode mode = SyntaxMode::kChars);

// kChars when every symbol is a single code point without whitespace,
// otherwise kTokens.
SyntaxMode preferred_mode(const std::vector<Symbol>& symbols);

LengthProfile length_profile(const Pattern& p);

// Injective string encoding of a pattern, for hashing and deduplication.
std::string pattern_key(const Pattern& p);

// Classical regular expression over `sigma`: `_` becomes (a+b+...), `%`
// becomes (a+b+...)*, the empty pattern becomes "ε". Symbols that are not a
// single plain character are written as <token>.
// Throws Error if a literal of `p` is not in `sigma`.
std::string to_classical_regex(const Pattern& p, const Alphabet& sigma);

std::ostream& operator<<(std::ostream& os, const Symbol& s);
std::ostream& operator<<(std::ostream& os, const Pattern& p);

}  // namespace likepat

template <>
struct std::hash<likepat::Symbol> {
  std::size_t operator()(const likepat::Symbol& s) const noexcept {
    return std::hash<std::string>{}(s.token());
  }
};

#endif  // LIKEPAT_PATTERN_HPP_
