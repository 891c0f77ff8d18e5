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

#include "likepat/expression.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <unordered_set>

#include "likepat/errors.hpp"
#include "likepat/matcher.hpp"
#include "likepat/normalize.hpp"

namespace likepat {
namespace {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::size_t saturating_add(std::size_t a, std::size_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

// ---------------------------------------------------------------------------
// Lexer / parser

enum class Tok { kLike, kNot, kAnd, kOr, kLParen, kRParen, kString, kEnd };

struct Lexeme {
  Tok kind;
  std::string text;
  std::size_t position;
};

std::vector<Lexeme> lex(std::string_view in) {
  std::vector<Lexeme> out;
  std::size_t i = 0;
  while (true) {
    while (i < in.size() && std::isspace(static_cast<unsigned char>(in[i]))) ++i;
    if (i == in.size()) break;
    const std::size_t start = i;
    const char c = in[i];
    if (c == '(') {
      out.push_back({Tok::kLParen, "(", start});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::kRParen, ")", start});
      ++i;
    } else if (c == '"') {
      std::string value;
      ++i;
      bool closed = false;
      while (i < in.size()) {
        if (in[i] == '\\' && i + 1 < in.size() && (in[i + 1] == '"' || in[i + 1] == '\\')) {
          value += in[i + 1];
          i += 2;
        } else if (in[i] == '"') {
          closed = true;
          ++i;
          break;
        } else {
          value += in[i++];
        }
      }
      if (!closed) throw ParseError("unterminated string", start);
      out.push_back({Tok::kString, std::move(value), start});
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string word;
      while (i < in.size() && std::isalpha(static_cast<unsigned char>(in[i]))) {
        word += static_cast<char>(std::toupper(static_cast<unsigned char>(in[i++])));
      }
      Tok kind;
      if (word == "LIKE") {
        kind = Tok::kLike;
      } else if (word == "NOT") {
        kind = Tok::kNot;
      } else if (word == "AND") {
        kind = Tok::kAnd;
      } else if (word == "OR") {
        kind = Tok::kOr;
      } else {
        throw ParseError("unknown keyword '" + word + "'", start);
      }
      out.push_back({kind, std::move(word), start});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }
  out.push_back({Tok::kEnd, "", in.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, std::optional<char> escape, SyntaxMode mode)
      : lexemes_(lex(text)), escape_(escape), mode_(mode) {}

  LikeExpression parse() {
    LikeExpression e = parse_or();
    if (peek().kind != Tok::kEnd) {
      throw ParseError("unexpected '" + peek().text + "'", peek().position);
    }
    return e;
  }

 private:
  const Lexeme& peek() const { return lexemes_[pos_]; }
  const Lexeme& next() { return lexemes_[pos_++]; }

  LikeExpression parse_or() {
    std::vector<LikeExpression> ops{parse_and()};
    while (peek().kind == Tok::kOr) {
      next();
      ops.push_back(parse_and());
    }
    return LikeExpression::disjunction(std::move(ops));
  }

  LikeExpression parse_and() {
    std::vector<LikeExpression> ops{parse_unary()};
    while (peek().kind == Tok::kAnd) {
      next();
      ops.push_back(parse_unary());
    }
    return LikeExpression::conjunction(std::move(ops));
  }

  LikeExpression parse_unary() {
    const Lexeme& lx = next();
    switch (lx.kind) {
      case Tok::kNot:
        return LikeExpression::negation(parse_unary());
      case Tok::kLParen: {
        LikeExpression e = parse_or();
        if (peek().kind != Tok::kRParen) {
          throw ParseError("expected ')'", peek().position);
        }
        next();
        return e;
      }
      case Tok::kLike: {
        const Lexeme& str = next();
        if (str.kind != Tok::kString) {
          throw ParseError("expected quoted pattern after LIKE", str.position);
        }
        try {
          return LikeExpression::atom(parse_pattern(str.text, escape_, mode_));
        } catch (const ParseError& e) {
          // Offset into the quoted text; +1 skips the opening quote.
          throw ParseError("bad pattern", str.position + 1 + e.position());
        }
      }
      default:
        throw ParseError(
            lx.kind == Tok::kEnd ? "unexpected end of input" : "unexpected '" + lx.text + "'",
            lx.position);
    }
  }

  std::vector<Lexeme> lexemes_;
  std::size_t pos_ = 0;
  std::optional<char> escape_;
  SyntaxMode mode_;
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void render(const LikeExpression& e, std::optional<char> escape, SyntaxMode mode,
            std::string& out) {
  using Kind = LikeExpression::Kind;
  auto child = [&](const LikeExpression& c, bool parens) {
    if (parens) out += '(';
    render(c, escape, mode, out);
    if (parens) out += ')';
  };
  switch (e.kind()) {
    case Kind::kAtom:
      out += "LIKE " + quote(render_pattern(e.pattern(), escape, mode));
      break;
    case Kind::kNot:
      out += "NOT ";
      child(e.children()[0],
            e.children()[0].kind() == Kind::kAnd || e.children()[0].kind() == Kind::kOr);
      break;
    case Kind::kAnd:
    case Kind::kOr: {
      const bool is_and = e.kind() == Kind::kAnd;
      for (std::size_t i = 0; i < e.children().size(); ++i) {
        if (i > 0) out += is_and ? " AND " : " OR ";
        const auto& c = e.children()[i];
        // Same-kind children cannot occur after flattening; an OR below an
        // AND needs parentheses.
        child(c, is_and && c.kind() == Kind::kOr);
      }
      break;
    }
  }
}

// ---------------------------------------------------------------------------
// DNF construction

// Clauses refer to literals by index into the builder's pool.
using Clause = std::vector<std::uint32_t>;
using ClauseList = std::vector<Clause>;

template <typename List>
std::size_t literal_total(const List& cl) {
  std::size_t n = 0;
  for (const auto& c : cl) n += c.size();
  return n;
}

std::vector<Pattern> expansions(const Pattern& p, const Alphabet& sigma, std::size_t cap) {
  std::size_t holes = std::count_if(p.begin(), p.end(), is_any_one);
  std::size_t required = 1;
  for (std::size_t i = 0; i < holes; ++i) {
    required = saturating_mul(required, sigma.size());
  }
  if (required > cap) throw CapExceeded(required, cap);

  std::vector<Pattern> out;
  out.reserve(required);
  std::vector<std::size_t> digits(holes, 0);
  while (true) {
    std::vector<PatternToken> tokens;
    tokens.reserve(p.size());
    std::size_t h = 0;
    for (const auto& t : p) {
      if (is_any_one(t)) {
        tokens.emplace_back(sigma[digits[h++]]);
      } else {
        tokens.push_back(t);
      }
    }
    out.emplace_back(std::move(tokens));
    // Odometer, last hole varies fastest.
    std::size_t k = holes;
    while (k > 0 && ++digits[k - 1] == sigma.size()) digits[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

class DnfBuilder {
 public:
  DnfBuilder(const Alphabet& sigma, std::size_t cap) : sigma_(sigma), cap_(cap) {}

  std::vector<std::vector<SignedAtom>> run(const LikeExpression& e) {
    ClauseList clauses = build(e, true);
    std::vector<std::vector<SignedAtom>> out;
    out.reserve(clauses.size());
    for (const auto& c : clauses) {
      std::vector<SignedAtom>& lits = out.emplace_back();
      lits.reserve(c.size());
      for (std::uint32_t i : c) lits.push_back(pool_[i]);
    }
    return out;
  }

 private:
  ClauseList build(const LikeExpression& e, bool positive) {
    using Kind = LikeExpression::Kind;
    switch (e.kind()) {
      case Kind::kAtom: {
        // Expanding a normalized pattern yields normalized patterns.
        const Pattern n = normalize(e.pattern());
        const bool start = n.empty() || !is_any_string(n[0]);
        const bool end = n.empty() || !is_any_string(n[n.size() - 1]);
        ClauseList out;
        Clause negated;
        for (auto& p : expansions(n, sigma_, cap_)) {
          const auto id = static_cast<std::uint32_t>(pool_.size());
          pool_.push_back(SignedAtom{std::move(p), positive, start, end});
          if (positive) {
            out.push_back({id});
          } else {
            negated.push_back(id);
          }
        }
        if (!positive) out.push_back(std::move(negated));
        return out;
      }
      case Kind::kNot:
        return build(e.children()[0], !positive);
      case Kind::kAnd:
      case Kind::kOr: {
        const bool conjunctive = (e.kind() == Kind::kAnd) == positive;
        std::vector<ClauseList> parts;
        parts.reserve(e.children().size());
        for (const auto& c : e.children()) parts.push_back(build(c, positive));
        return conjunctive ? product(parts) : concat(parts);
      }
    }
    return {};
  }

  ClauseList concat(std::vector<ClauseList>& parts) {
    ClauseList out = std::move(parts.front());
    for (std::size_t i = 1; i < parts.size(); ++i) {
      for (auto& c : parts[i]) out.push_back(std::move(c));
    }
    check(literal_total(out));
    return out;
  }

  ClauseList product(std::vector<ClauseList>& parts) {
    ClauseList acc = std::move(parts.front());
    for (std::size_t i = 1; i < parts.size(); ++i) {
      ClauseList& p = parts[i];
      // |A x B| literals = |A| * lits(B) + |B| * lits(A).
      check(saturating_add(saturating_mul(acc.size(), literal_total(p)),
                           saturating_mul(p.size(), literal_total(acc))));
      ClauseList next;
      next.reserve(acc.size() * p.size());
      for (const auto& a : acc) {
        for (const auto& b : p) {
          Clause c;
          c.reserve(a.size() + b.size());
          c.insert(c.end(), a.begin(), a.end());
          c.insert(c.end(), b.begin(), b.end());
          next.push_back(std::move(c));
        }
      }
      acc = std::move(next);
    }
    return acc;
  }

  void check(std::size_t required) const {
    if (required > cap_) throw CapExceeded(required, cap_);
  }

  const Alphabet& sigma_;
  std::size_t cap_;
  std::vector<SignedAtom> pool_;
};

void collect_atoms(const LikeExpression& e, std::vector<Pattern>& out,
                   std::unordered_set<std::string>& seen) {
  if (e.kind() == LikeExpression::Kind::kAtom) {
    std::string key = pattern_key(e.pattern());
    if (seen.insert(std::move(key)).second) out.push_back(e.pattern());
    return;
  }
  for (const auto& c : e.children()) collect_atoms(c, out, seen);
}

}  // namespace

LikeExpression LikeExpression::atom(Pattern p) {
  return LikeExpression(Kind::kAtom, std::move(p), {});
}

LikeExpression LikeExpression::negation(LikeExpression e) {
  std::vector<LikeExpression> children;
  children.push_back(std::move(e));
  return LikeExpression(Kind::kNot, Pattern(), std::move(children));
}

LikeExpression LikeExpression::connective(Kind kind, std::vector<LikeExpression> ops) {
  if (ops.empty()) throw Error("connective needs at least one operand");
  if (ops.size() == 1) return std::move(ops.front());
  std::vector<LikeExpression> flat;
  for (auto& op : ops) {
    if (op.kind_ == kind) {
      for (auto& c : op.children_) flat.push_back(std::move(c));
    } else {
      flat.push_back(std::move(op));
    }
  }
  return LikeExpression(kind, Pattern(), std::move(flat));
}

LikeExpression LikeExpression::conjunction(std::vector<LikeExpression> operands) {
  return connective(Kind::kAnd, std::move(operands));
}

LikeExpression LikeExpression::disjunction(std::vector<LikeExpression> operands) {
  return connective(Kind::kOr, std::move(operands));
}

std::size_t expression_size(const LikeExpression& e) {
  if (e.kind() == LikeExpression::Kind::kAtom) return e.pattern().size();
  std::size_t n = 0;
  for (const auto& c : e.children()) n += expression_size(c);
  return n;
}

std::size_t atom_count(const LikeExpression& e) {
  if (e.kind() == LikeExpression::Kind::kAtom) return 1;
  std::size_t n = 0;
  for (const auto& c : e.children()) n += atom_count(c);
  return n;
}

LikeExpression parse_expression(std::string_view text, std::optional<char> escape,
                                SyntaxMode mode) {
  return Parser(text, escape, mode).parse();
}

std::string render_expression(const LikeExpression& e, std::optional<char> escape,
                              SyntaxMode mode) {
  std::string out;
  render(e, escape, mode, out);
  return out;
}

bool evaluate(const LikeExpression& e, const Text& t) {
  switch (e.kind()) {
    case LikeExpression::Kind::kAtom:
      return match_greedy(e.pattern(), t);
    case LikeExpression::Kind::kNot:
      return !evaluate(e.children()[0], t);
    case LikeExpression::Kind::kAnd:
      return std::all_of(e.children().begin(), e.children().end(),
                         [&](const auto& c) { return evaluate(c, t); });
    case LikeExpression::Kind::kOr:
      return std::any_of(e.children().begin(), e.children().end(),
                         [&](const auto& c) { return evaluate(c, t); });
  }
  return false;
}

bool is_monotone(const LikeExpression& e) {
  if (e.kind() == LikeExpression::Kind::kNot) return false;
  return std::all_of(e.children().begin(), e.children().end(),
                     [](const auto& c) { return is_monotone(c); });
}

LikeExpression expand_underscores(const Pattern& p, const Alphabet& sigma, std::size_t cap) {
  std::vector<LikeExpression> atoms;
  for (auto& q : expansions(p, sigma, cap)) {
    atoms.push_back(LikeExpression::atom(std::move(q)));
  }
  return LikeExpression::disjunction(std::move(atoms));
}

std::size_t Dnf::atom_count() const { return literal_total(clauses); }

LikeExpression Dnf::to_expression() const {
  const auto everything = LikeExpression::atom(Pattern({AnyString{}}));
  if (clauses.empty()) return LikeExpression::negation(everything);
  std::vector<LikeExpression> terms;
  for (const auto& clause : clauses) {
    if (clause.empty()) {
      terms.push_back(everything);
      continue;
    }
    std::vector<LikeExpression> lits;
    for (const auto& a : clause) {
      auto atom = LikeExpression::atom(a.pattern);
      lits.push_back(a.positive ? atom : LikeExpression::negation(atom));
    }
    terms.push_back(LikeExpression::conjunction(std::move(lits)));
  }
  return LikeExpression::disjunction(std::move(terms));
}

Dnf to_dot_depth1_dnf(const LikeExpression& e, const Alphabet& sigma, std::size_t cap) {
  DnfBuilder builder(sigma, cap);
  return Dnf{builder.run(e)};
}

std::vector<Pattern> distinct_atoms(const LikeExpression& e) {
  std::vector<Pattern> out;
  std::unordered_set<std::string> seen;
  collect_atoms(e, out, seen);
  return out;
}

}  // namespace likepat
