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

#include "likepat/reductions.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "likepat/errors.hpp"

namespace likepat {

Pattern encode_majority(std::size_t n) {
  if (n == 0) throw Error("majority gadget needs n >= 1");
  const std::size_t ones = (n + 2) / 2;  // ceil((n + 1) / 2)
  std::vector<PatternToken> tokens{AnyString{}};
  for (std::size_t i = 0; i < ones; ++i) {
    tokens.emplace_back(Symbol("1"));
    tokens.emplace_back(AnyString{});
  }
  return Pattern(std::move(tokens));
}

void Cnf::validate() const {
  if (n_vars == 0) throw Error("CNF needs at least one variable");
  for (const auto& clause : clauses) {
    for (const auto& l : clause) {
      if (l.variable == 0 || l.variable > n_vars) {
        throw Error("literal variable " + std::to_string(l.variable) + " out of range 1.." +
                    std::to_string(n_vars));
      }
    }
  }
}

bool Cnf::satisfied_by(const std::vector<bool>& assignment) const {
  for (const auto& clause : clauses) {
    bool sat = false;
    for (const auto& l : clause) {
      sat |= assignment.at(l.variable - 1) != l.negated;
    }
    if (!sat) return false;
  }
  return true;
}

Cnf parse_dimacs(std::string_view text) {
  Cnf f;
  bool have_header = false;
  std::size_t expected_clauses = 0;
  std::vector<CnfLiteral> pending;
  std::size_t pending_start = 0;

  std::size_t offset = 0;
  while (offset < text.size()) {
    std::size_t eol = text.find('\n', offset);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(offset, eol - offset);
    const std::size_t line_start = offset;
    offset = eol + 1;

    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == 'c') continue;
    // SATLIB files end the formula with a '%' line.
    if (line[first] == '%') break;
    std::istringstream in{std::string(line)};
    if (line[first] == 'p') {
      std::string p, kind;
      long long vars = -1, clauses = -1;
      if (have_header || !(in >> p >> kind >> vars >> clauses) || kind != "cnf" || vars < 1 ||
          clauses < 0) {
        throw ParseError("bad DIMACS header", line_start + first);
      }
      have_header = true;
      f.n_vars = static_cast<std::size_t>(vars);
      expected_clauses = static_cast<std::size_t>(clauses);
      continue;
    }
    if (!have_header) throw ParseError("clause before header", line_start + first);
    std::string word;
    while (in >> word) {
      char* end = nullptr;
      long long v = std::strtoll(word.c_str(), &end, 10);
      if (*end != '\0') throw ParseError("bad literal '" + word + "'", line_start);
      if (v == 0) {
        if (pending.size() != 3) {
          throw ParseError("clause must have exactly 3 literals", pending_start);
        }
        f.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      if (pending.empty()) pending_start = line_start;
      const auto var = static_cast<std::size_t>(v < 0 ? -v : v);
      if (var > f.n_vars) {
        throw ParseError("variable " + std::to_string(var) + " out of range", line_start);
      }
      pending.push_back({var, v < 0});
    }
  }
  if (!have_header) throw ParseError("missing DIMACS header", 0);
  if (!pending.empty()) throw ParseError("unterminated clause", pending_start);
  if (f.clauses.size() != expected_clauses) {
    throw ParseError("header announces " + std::to_string(expected_clauses) + " clauses, found " +
                         std::to_string(f.clauses.size()),
                     text.size());
  }
  return f;
}

std::string to_dimacs(const Cnf& f) {
  std::ostringstream out;
  out << "p cnf " << f.n_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& clause : f.clauses) {
    for (const auto& l : clause) {
      out << (l.negated ? "-" : "") << l.variable << ' ';
    }
    out << "0\n";
  }
  return out.str();
}

Symbol literal_symbol(const CnfLiteral& l) {
  return Symbol((l.negated ? "~x" : "x") + std::to_string(l.variable));
}

Encoding encode_3sat(const Cnf& f) {
  f.validate();
  std::vector<Symbol> symbols;
  for (bool negated : {false, true}) {
    for (std::size_t v = 1; v <= f.n_vars; ++v) {
      symbols.push_back(literal_symbol({v, negated}));
    }
  }

  auto occurs = [](const CnfLiteral& l) {
    return LikeExpression::atom(Pattern({AnyString{}, literal_symbol(l), AnyString{}}));
  };

  std::vector<LikeExpression> conjuncts;
  conjuncts.push_back(LikeExpression::atom(Pattern(std::vector<PatternToken>(f.n_vars, AnyOne{}))));
  for (std::size_t v = 1; v <= f.n_vars; ++v) {
    conjuncts.push_back(LikeExpression::disjunction({occurs({v, false}), occurs({v, true})}));
  }
  for (const auto& clause : f.clauses) {
    conjuncts.push_back(
        LikeExpression::disjunction({occurs(clause[0]), occurs(clause[1]), occurs(clause[2])}));
  }
  return Encoding{LikeExpression::conjunction(std::move(conjuncts)), Alphabet(std::move(symbols))};
}

std::optional<std::vector<bool>> decode_assignment(const Text& witness, const Cnf& f) {
  if (witness.size() != f.n_vars) return std::nullopt;
  std::vector<bool> assignment(f.n_vars, false);
  std::vector<bool> seen(f.n_vars, false);
  for (const auto& s : witness) {
    std::string_view tok = s.token();
    const bool negated = tok.starts_with("~");
    if (negated) tok.remove_prefix(1);
    if (!tok.starts_with("x")) return std::nullopt;
    tok.remove_prefix(1);
    std::size_t v = 0;
    for (char c : tok) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
      v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    if (tok.empty() || v == 0 || v > f.n_vars || seen[v - 1]) return std::nullopt;
    seen[v - 1] = true;
    assignment[v - 1] = !negated;
  }
  return assignment;
}

}  // namespace likepat
