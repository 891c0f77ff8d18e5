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

#include "oracles.hpp"

#include <set>
#include <stdexcept>

namespace likepat::testing {

Alphabet chars(const std::string& s) { return Alphabet::from_chars(s); }
Pattern pat(const std::string& s) { return parse_pattern(s); }
Text txt(const std::string& s) { return parse_text(s); }

void for_each_text(const Alphabet& sigma, std::size_t max_len,
                   const std::function<void(const Text&)>& fn) {
  for (std::size_t len = 0; len <= max_len; ++len) {
    std::vector<std::size_t> digits(len, 0);
    while (true) {
      Text t;
      for (auto d : digits) t.push_back(sigma[d]);
      fn(t);
      std::size_t k = len;
      while (k > 0 && ++digits[k - 1] == sigma.size()) digits[--k] = 0;
      if (k == 0) break;
    }
  }
}

void for_each_pattern(const Alphabet& sigma, std::size_t size,
                      const std::function<void(const Pattern&)>& fn) {
  std::vector<PatternToken> choices;
  for (const auto& s : sigma.symbols()) choices.emplace_back(s);
  choices.emplace_back(AnyOne{});
  choices.emplace_back(AnyString{});
  std::vector<std::size_t> digits(size, 0);
  while (true) {
    std::vector<PatternToken> tokens;
    for (auto d : digits) tokens.push_back(choices[d]);
    fn(Pattern(std::move(tokens)));
    std::size_t k = size;
    while (k > 0 && ++digits[k - 1] == choices.size()) digits[--k] = 0;
    if (k == 0) break;
  }
}

namespace {

bool backtrack(const Pattern& p, std::size_t i, const Text& t, std::size_t j) {
  if (i == p.size()) return j == t.size();
  if (is_any_string(p[i])) {
    for (std::size_t k = j; k <= t.size(); ++k) {
      if (backtrack(p, i + 1, t, k)) return true;
    }
    return false;
  }
  if (j == t.size()) return false;
  if (is_any_one(p[i]) || std::get<Symbol>(p[i]) == t[j]) {
    return backtrack(p, i + 1, t, j + 1);
  }
  return false;
}

// Regex AST evaluated as "set of end positions reachable from a start".
struct Re {
  enum Kind { kSym, kEps, kCat, kAlt, kStar } kind;
  std::string sym;
  std::vector<Re> kids;
};

class ReParser {
 public:
  explicit ReParser(const std::string& s) : s_(s) {}
  Re parse() {
    Re r = alt();
    if (i_ != s_.size()) throw std::runtime_error("regex: trailing input");
    return r;
  }

 private:
  Re alt() {
    Re r{Re::kAlt, "", {cat()}};
    while (i_ < s_.size() && s_[i_] == '+') {
      ++i_;
      r.kids.push_back(cat());
    }
    return r;
  }
  Re cat() {
    Re r{Re::kCat, "", {}};
    while (i_ < s_.size() && s_[i_] != '+' && s_[i_] != ')') r.kids.push_back(star());
    return r;
  }
  Re star() {
    Re r = atom();
    while (i_ < s_.size() && s_[i_] == '*') {
      ++i_;
      r = Re{Re::kStar, "", {r}};
    }
    return r;
  }
  Re atom() {
    if (s_[i_] == '(') {
      ++i_;
      Re r = alt();
      if (i_ >= s_.size() || s_[i_] != ')') throw std::runtime_error("regex: missing )");
      ++i_;
      return r;
    }
    if (s_.compare(i_, 2, "ε") == 0) {
      i_ += 2;
      return Re{Re::kEps, "", {}};
    }
    if (s_[i_] == '<') {
      auto close = s_.find('>', i_);
      Re r{Re::kSym, s_.substr(i_ + 1, close - i_ - 1), {}};
      i_ = close + 1;
      return r;
    }
    auto cps = split_utf8(s_.substr(i_));
    i_ += cps[0].size();
    return Re{Re::kSym, cps[0], {}};
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

std::set<std::size_t> ends(const Re& r, const Text& t, std::size_t from) {
  switch (r.kind) {
    case Re::kSym:
      if (from < t.size() && t[from].token() == r.sym) return {from + 1};
      return {};
    case Re::kEps:
      return {from};
    case Re::kCat: {
      std::set<std::size_t> cur{from};
      for (const auto& k : r.kids) {
        std::set<std::size_t> next;
        for (auto p : cur) {
          auto e = ends(k, t, p);
          next.insert(e.begin(), e.end());
        }
        cur = std::move(next);
      }
      return cur;
    }
    case Re::kAlt: {
      std::set<std::size_t> out;
      for (const auto& k : r.kids) {
        auto e = ends(k, t, from);
        out.insert(e.begin(), e.end());
      }
      return out;
    }
    case Re::kStar: {
      std::set<std::size_t> out{from};
      std::vector<std::size_t> work{from};
      while (!work.empty()) {
        auto p = work.back();
        work.pop_back();
        for (auto e : ends(r.kids[0], t, p)) {
          if (out.insert(e).second) work.push_back(e);
        }
      }
      return out;
    }
  }
  return {};
}

}  // namespace

bool backtrack_match(const Pattern& p, const Text& t) { return backtrack(p, 0, t, 0); }

bool regex_match(const std::string& regex, const Text& t) {
  Re r = ReParser(regex).parse();
  return ends(r, t, 0).contains(t.size());
}

std::optional<std::vector<bool>> brute_force_sat(const Cnf& f) {
  for (std::size_t mask = 0; mask < (std::size_t{1} << f.n_vars); ++mask) {
    std::vector<bool> a(f.n_vars);
    for (std::size_t v = 0; v < f.n_vars; ++v) a[v] = (mask >> v) & 1u;
    if (f.satisfied_by(a)) return a;
  }
  return std::nullopt;
}

Pattern Random::pattern(const Alphabet& sigma, std::size_t size) {
  std::vector<PatternToken> tokens;
  for (std::size_t i = 0; i < size; ++i) {
    std::size_t r = below(sigma.size() + 2);
    if (r < sigma.size()) {
      tokens.emplace_back(sigma[r]);
    } else if (r == sigma.size()) {
      tokens.emplace_back(AnyOne{});
    } else {
      tokens.emplace_back(AnyString{});
    }
  }
  return Pattern(std::move(tokens));
}

Text Random::text(const Alphabet& sigma, std::size_t len) {
  Text t;
  for (std::size_t i = 0; i < len; ++i) t.push_back(sigma[below(sigma.size())]);
  return t;
}

LikeExpression Random::expression(const Alphabet& sigma, std::size_t atoms, std::size_t max_pattern,
                                  bool allow_not) {
  LikeExpression e = [&] {
    if (atoms <= 1) return LikeExpression::atom(pattern(sigma, below(max_pattern + 1)));
    std::size_t left = 1 + below(atoms - 1);
    std::vector<LikeExpression> ops{expression(sigma, left, max_pattern, allow_not),
                                    expression(sigma, atoms - left, max_pattern, allow_not)};
    return coin() ? LikeExpression::conjunction(std::move(ops))
                  : LikeExpression::disjunction(std::move(ops));
  }();
  if (allow_not && below(3) == 0) return LikeExpression::negation(std::move(e));
  return e;
}

Cnf Random::cnf(std::size_t n_vars, std::size_t n_clauses) {
  Cnf f;
  f.n_vars = n_vars;
  for (std::size_t c = 0; c < n_clauses; ++c) {
    CnfClause clause;
    for (auto& l : clause) l = CnfLiteral{1 + below(n_vars), coin()};
    f.clauses.push_back(clause);
  }
  return f;
}

}  // namespace likepat::testing
