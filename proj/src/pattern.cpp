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

#include "likepat/pattern.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "likepat/errors.hpp"

namespace likepat {
namespace {

bool is_space(std::string_view cp) {
  return cp.size() == 1 && (cp[0] == ' ' || cp[0] == '\t' || cp[0] == '\n' || cp[0] == '\r' ||
                            cp[0] == '\v' || cp[0] == '\f');
}

std::vector<std::string> split_whitespace(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text.substr(i, 1))) ++i;
    std::size_t start = i;
    while (i < text.size() && !is_space(text.substr(i, 1))) ++i;
    if (i > start) out.emplace_back(text.substr(start, i - start));
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.substr(0, 1))) s.remove_prefix(1);
  while (!s.empty() && is_space(s.substr(s.size() - 1))) s.remove_suffix(1);
  return s;
}

bool is_single_code_point(const std::string& token) { return split_utf8(token).size() == 1; }

bool is_plain_char(const std::string& token) {
  return is_single_code_point(token) && !is_space(token);
}

}  // namespace

Symbol::Symbol(std::string token) : token_(std::move(token)) {
  if (token_.empty()) throw Error("symbol must be nonempty");
}

Alphabet::Alphabet(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw Error("alphabet must be nonempty");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    auto [it, inserted] = index_.emplace(symbols_[i].token(), i);
    if (!inserted) {
      throw Error("duplicate alphabet symbol '" + symbols_[i].token() + "'");
    }
  }
}

Alphabet Alphabet::from_chars(std::string_view chars) {
  std::vector<Symbol> symbols;
  for (auto& cp : split_utf8(chars)) {
    if (is_space(cp)) throw Error("whitespace is not allowed in an inline alphabet");
    symbols.emplace_back(std::move(cp));
  }
  return Alphabet(std::move(symbols));
}

Alphabet Alphabet::from_lines(std::istream& in) {
  std::vector<Symbol> symbols;
  std::string line;
  while (std::getline(in, line)) {
    auto token = trim(line);
    if (token.empty()) continue;
    symbols.emplace_back(std::string(token));
  }
  return Alphabet(std::move(symbols));
}

Alphabet Alphabet::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open alphabet file '" + path + "'");
  return from_lines(in);
}

std::optional<std::size_t> Alphabet::index_of(const Symbol& s) const {
  auto it = index_.find(s.token());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string Alphabet::to_lines() const {
  std::string out;
  for (const auto& s : symbols_) out += s.token() + "\n";
  return out;
}

bool Pattern::has_any_string() const {
  return std::any_of(tokens_.begin(), tokens_.end(), is_any_string);
}

std::vector<std::string> split_utf8(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    auto lead = static_cast<unsigned char>(text[i]);
    std::size_t len = lead < 0x80           ? 1
                      : (lead >> 5) == 0x6  ? 2
                      : (lead >> 4) == 0xE  ? 3
                      : (lead >> 3) == 0x1E ? 4
                                            : 0;
    if (len == 0 || i + len > text.size()) {
      throw ParseError("malformed UTF-8", i);
    }
    for (std::size_t k = 1; k < len; ++k) {
      if ((static_cast<unsigned char>(text[i + k]) >> 6) != 0x2) {
        throw ParseError("malformed UTF-8", i + k);
      }
    }
    out.emplace_back(text.substr(i, len));
    i += len;
  }
  return out;
}

Pattern parse_pattern(std::string_view text, std::optional<char> escape, SyntaxMode mode) {
  if (escape && (*escape == '%' || *escape == '_')) {
    throw Error("escape character must not be a wildcard");
  }
  const std::string esc = escape ? std::string(1, *escape) : std::string();
  std::vector<PatternToken> tokens;

  if (mode == SyntaxMode::kTokens) {
    std::size_t offset = 0;
    for (auto& word : split_whitespace(text)) {
      offset = text.find(word, offset);
      if (escape && word.starts_with(esc)) {
        if (word.size() == esc.size()) {
          throw ParseError("dangling escape", offset);
        }
        tokens.emplace_back(Symbol(word.substr(esc.size())));
      } else if (word == "%") {
        tokens.emplace_back(AnyString{});
      } else if (word == "_") {
        tokens.emplace_back(AnyOne{});
      } else {
        tokens.emplace_back(Symbol(word));
      }
      offset += word.size();
    }
    return Pattern(std::move(tokens));
  }

  auto cps = split_utf8(text);
  std::size_t offset = 0;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    const std::string& cp = cps[i];
    if (escape && cp == esc) {
      if (i + 1 == cps.size()) throw ParseError("dangling escape", offset);
      offset += cp.size();
      ++i;
      tokens.emplace_back(Symbol(cps[i]));
    } else if (cp == "%") {
      tokens.emplace_back(AnyString{});
    } else if (cp == "_") {
      tokens.emplace_back(AnyOne{});
    } else {
      tokens.emplace_back(Symbol(cp));
    }
    offset += cps[i].size();
  }
  return Pattern(std::move(tokens));
}

std::string render_pattern(const Pattern& p, std::optional<char> escape, SyntaxMode mode) {
  if (escape && (*escape == '%' || *escape == '_')) {
    throw Error("escape character must not be a wildcard");
  }
  const std::string esc = escape ? std::string(1, *escape) : std::string();
  std::string out;
  bool first = true;
  for (const auto& t : p) {
    if (mode == SyntaxMode::kTokens && !first) out += ' ';
    first = false;
    if (is_any_string(t)) {
      out += '%';
      continue;
    }
    if (is_any_one(t)) {
      out += '_';
      continue;
    }
    const std::string& token = std::get<Symbol>(t).token();
    bool needs_escape;
    if (mode == SyntaxMode::kChars) {
      if (split_utf8(token).size() != 1) {
        throw Error("symbol '" + token + "' is not a single character");
      }
      needs_escape = token == "%" || token == "_" || (escape && token == esc);
    } else {
      if (std::any_of(token.begin(), token.end(),
                      [](char c) { return is_space(std::string_view(&c, 1)); })) {
        throw Error("symbol '" + token + "' contains whitespace");
      }
      needs_escape = token == "%" || token == "_" || (escape && token.starts_with(esc));
    }
    if (needs_escape) {
      if (!escape) {
        throw Error("literal '" + token + "' cannot be rendered without an escape");
      }
      out += esc;
    }
    out += token;
  }
  return out;
}

Text parse_text(std::string_view text, SyntaxMode mode) {
  Text out;
  auto parts = mode == SyntaxMode::kChars ? split_utf8(text) : split_whitespace(text);
  out.reserve(parts.size());
  for (auto& s : parts) out.emplace_back(std::move(s));
  return out;
}

std::string render_text(const Text& t, SyntaxMode mode) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (mode == SyntaxMode::kTokens && i > 0) out += ' ';
    out += t[i].token();
  }
  return out;
}

SyntaxMode preferred_mode(const std::vector<Symbol>& symbols) {
  for (const auto& s : symbols) {
    if (!is_single_code_point(s.token())) return SyntaxMode::kTokens;
  }
  return SyntaxMode::kChars;
}

LengthProfile length_profile(const Pattern& p) {
  LengthProfile profile;
  for (const auto& t : p) {
    if (is_any_string(t)) {
      profile.fixed_length = false;
    } else {
      ++profile.min_length;
    }
  }
  // Alphabets are never empty, so any `%` yields infinitely many words.
  profile.infinite = !profile.fixed_length;
  return profile;
}

std::string pattern_key(const Pattern& p) {
  std::string key;
  for (const auto& t : p) {
    if (is_any_string(t)) {
      key += '%';
    } else if (is_any_one(t)) {
      key += '_';
    } else {
      const auto& tok = std::get<Symbol>(t).token();
      key += std::to_string(tok.size()) + ':' + tok;
    }
  }
  return key;
}

std::string to_classical_regex(const Pattern& p, const Alphabet& sigma) {
  auto write_symbol = [](const Symbol& s) {
    const std::string& tok = s.token();
    static constexpr std::string_view kMeta = "()+*<>ε";
    if (is_plain_char(tok) && kMeta.find(tok) == std::string_view::npos) {
      return tok;
    }
    return "<" + tok + ">";
  };
  std::string any = "(";
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (i > 0) any += '+';
    any += write_symbol(sigma[i]);
  }
  any += ')';

  if (p.empty()) return "ε";
  std::string out;
  for (const auto& t : p) {
    if (is_any_string(t)) {
      out += any + "*";
    } else if (is_any_one(t)) {
      out += any;
    } else {
      const auto& s = std::get<Symbol>(t);
      if (!sigma.contains(s)) {
        throw Error("literal '" + s.token() + "' is not in the alphabet");
      }
      out += write_symbol(s);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Symbol& s) { return os << s.token(); }

std::ostream& operator<<(std::ostream& os, const Pattern& p) {
  std::vector<Symbol> literals;
  for (const auto& t : p) {
    if (is_literal(t)) literals.push_back(std::get<Symbol>(t));
  }
  return os << '"' << render_pattern(p, '\\', preferred_mode(literals)) << '"';
}

}  // namespace likepat
