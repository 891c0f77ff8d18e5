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

#include "likepat/automata.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "likepat/errors.hpp"
#include "likepat/normalize.hpp"

namespace likepat {

// ---------------------------------------------------------------------------
// PositionSet / PatternNfa

bool PositionSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<std::size_t> PositionSet::elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < positions_; ++i) {
    if (test(i)) out.push_back(i);
  }
  return out;
}

bool PositionSet::is_subset_of(const PositionSet& other) const {
  if (positions_ != other.positions_) return false;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] & ~other.words_[k]) return false;
  }
  return true;
}

PositionSet PatternNfa::closure(PositionSet s) const {
  for (std::size_t i = 0; i < pattern_.size(); ++i) {
    if (s.test(i) && is_any_string(pattern_[i])) s.set(i + 1);
  }
  return s;
}

PositionSet PatternNfa::initial() const {
  PositionSet s(pattern_.size() + 1);
  s.set(0);
  return closure(std::move(s));
}

PatternNfa compile(const Pattern& p) { return PatternNfa(p); }

PositionSet nfa_step(const PatternNfa& n, const PositionSet& s, const Symbol& x) {
  const Pattern& p = n.pattern();
  PositionSet out(p.size() + 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!s.test(i)) continue;
    if (is_any_string(p[i])) {
      out.set(i);
    } else if (consumes(p[i], x)) {
      out.set(i + 1);
    }
  }
  return n.closure(std::move(out));
}

bool nfa_accepts(const PatternNfa& n, const Text& t) {
  PositionSet s = n.initial();
  for (const auto& x : t) {
    s = nfa_step(n, s, x);
    if (s.empty()) return false;
  }
  return n.is_accepting(s);
}

// ---------------------------------------------------------------------------
// ExpressionAutomaton

namespace {

using Word = std::uint64_t;

struct CompiledAtom {
  std::size_t offset = 0;  // first word in EvalState::words
  std::size_t words = 0;
  std::size_t length = 0;  // token count m; positions are 0..m
  // Smallest j such that tokens [j, m) are all `%` and j < m, else m.
  std::size_t settled_from = 0;
  std::vector<Word> star;
  std::vector<std::vector<Word>> consume;  // per alphabet symbol
};

struct Node {
  LikeExpression::Kind kind;
  std::size_t atom = 0;
  std::vector<std::size_t> children;
};

struct EvalStateHash {
  std::size_t operator()(const EvalState& s) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (Word w : s.words) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xbf58476d1ce4e5b9ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

bool bit(const Word* w, std::size_t i) { return (w[i / 64] >> (i % 64)) & 1u; }

}  // namespace

struct ExpressionAutomaton::Impl {
  std::vector<CompiledAtom> atoms;
  std::size_t total_words = 0;
  std::vector<Node> nodes;
  std::vector<std::size_t> roots;

  std::size_t add_node(const LikeExpression& e,
                       const std::unordered_map<std::string, std::size_t>& index) {
    Node n{e.kind(), 0, {}};
    if (e.kind() == LikeExpression::Kind::kAtom) {
      n.atom = index.at(pattern_key(e.pattern()));
    } else {
      for (const auto& c : e.children()) n.children.push_back(add_node(c, index));
    }
    nodes.push_back(std::move(n));
    return nodes.size() - 1;
  }

  bool atom_value(std::size_t a, const EvalState& s) const {
    const auto& at = atoms[a];
    return bit(s.words.data() + at.offset, at.length);
  }

  Truth atom_settled(std::size_t a, const EvalState& s) const {
    const auto& at = atoms[a];
    const Word* w = s.words.data() + at.offset;
    bool any = false;
    for (std::size_t k = 0; k < at.words; ++k) any |= w[k] != 0;
    if (!any) return Truth::kFalse;
    for (std::size_t i = at.settled_from; i < at.length; ++i) {
      if (bit(w, i)) return Truth::kTrue;
    }
    return Truth::kUnknown;
  }

  bool value(std::size_t node, const EvalState& s) const {
    const Node& n = nodes[node];
    switch (n.kind) {
      case LikeExpression::Kind::kAtom:
        return atom_value(n.atom, s);
      case LikeExpression::Kind::kNot:
        return !value(n.children[0], s);
      case LikeExpression::Kind::kAnd:
        for (auto c : n.children) {
          if (!value(c, s)) return false;
        }
        return true;
      case LikeExpression::Kind::kOr:
        for (auto c : n.children) {
          if (value(c, s)) return true;
        }
        return false;
    }
    return false;
  }

  Truth settled(std::size_t node, const EvalState& s) const {
    const Node& n = nodes[node];
    switch (n.kind) {
      case LikeExpression::Kind::kAtom:
        return atom_settled(n.atom, s);
      case LikeExpression::Kind::kNot: {
        Truth t = settled(n.children[0], s);
        return t == Truth::kUnknown ? t : t == Truth::kTrue ? Truth::kFalse : Truth::kTrue;
      }
      case LikeExpression::Kind::kAnd:
      case LikeExpression::Kind::kOr: {
        // AND: a false operand decides; OR: a true operand decides.
        const Truth decisive = n.kind == LikeExpression::Kind::kAnd ? Truth::kFalse : Truth::kTrue;
        bool unknown = false;
        for (auto c : n.children) {
          Truth t = settled(c, s);
          if (t == decisive) return decisive;
          unknown |= t == Truth::kUnknown;
        }
        if (unknown) return Truth::kUnknown;
        return decisive == Truth::kFalse ? Truth::kTrue : Truth::kFalse;
      }
    }
    return Truth::kUnknown;
  }
};

ExpressionAutomaton::ExpressionAutomaton(std::vector<LikeExpression> expressions,
                                         const Alphabet& sigma)
    : sigma_(sigma), impl_(std::make_unique<Impl>()) {
  std::vector<Pattern> patterns;
  std::unordered_map<std::string, std::size_t> index;
  for (const auto& e : expressions) {
    for (auto& p : distinct_atoms(e)) {
      if (index.emplace(pattern_key(p), patterns.size()).second) {
        patterns.push_back(std::move(p));
      }
    }
  }
  for (const auto& p : patterns) {
    // Normalization preserves the language and shortens `%` runs, which keeps
    // the closure to a single shift.
    Pattern n = normalize(p);
    CompiledAtom at;
    at.length = n.size();
    at.words = (n.size() + 1 + 63) / 64;
    at.offset = impl_->total_words;
    impl_->total_words += at.words;
    at.star.assign(at.words, 0);
    at.consume.assign(sigma.size(), std::vector<Word>(at.words, 0));
    for (std::size_t i = 0; i < n.size(); ++i) {
      const Word b = Word{1} << (i % 64);
      if (is_any_string(n[i])) {
        at.star[i / 64] |= b;
        continue;
      }
      for (std::size_t x = 0; x < sigma.size(); ++x) {
        if (consumes(n[i], sigma[x])) at.consume[x][i / 64] |= b;
      }
    }
    at.settled_from = n.size();
    while (at.settled_from > 0 && is_any_string(n[at.settled_from - 1])) {
      --at.settled_from;
    }
    impl_->atoms.push_back(std::move(at));
  }
  for (const auto& e : expressions) {
    impl_->roots.push_back(impl_->add_node(e, index));
  }
}

ExpressionAutomaton::~ExpressionAutomaton() = default;
ExpressionAutomaton::ExpressionAutomaton(ExpressionAutomaton&&) noexcept = default;
ExpressionAutomaton& ExpressionAutomaton::operator=(ExpressionAutomaton&&) noexcept = default;

std::size_t ExpressionAutomaton::atom_count() const { return impl_->atoms.size(); }

namespace {

// out |= (in & mask) << 1 over `words` words.
void shift_or(const Word* in, const Word* mask, Word* out, std::size_t words) {
  Word carry = 0;
  for (std::size_t k = 0; k < words; ++k) {
    const Word v = in[k] & mask[k];
    out[k] |= (v << 1) | carry;
    carry = v >> 63;
  }
}

void close(const CompiledAtom& at, Word* w) {
  // Normalized patterns have no `%%`, but loop anyway until stable.
  std::vector<Word> before(w, w + at.words);
  while (true) {
    shift_or(w, at.star.data(), w, at.words);
    if (std::equal(before.begin(), before.end(), w)) break;
    before.assign(w, w + at.words);
  }
}

}  // namespace

EvalState ExpressionAutomaton::initial() const {
  EvalState s{std::vector<Word>(impl_->total_words, 0)};
  for (const auto& at : impl_->atoms) {
    Word* w = s.words.data() + at.offset;
    w[0] = 1;
    close(at, w);
  }
  return s;
}

EvalState ExpressionAutomaton::step(const EvalState& s, std::size_t symbol) const {
  EvalState out{std::vector<Word>(impl_->total_words, 0)};
  for (const auto& at : impl_->atoms) {
    const Word* in = s.words.data() + at.offset;
    Word* w = out.words.data() + at.offset;
    for (std::size_t k = 0; k < at.words; ++k) w[k] = in[k] & at.star[k];
    shift_or(in, at.consume[symbol].data(), w, at.words);
    close(at, w);
  }
  return out;
}

bool ExpressionAutomaton::value(std::size_t which, const EvalState& s) const {
  return impl_->value(impl_->roots.at(which), s);
}

ExpressionAutomaton::Truth ExpressionAutomaton::settled(std::size_t which,
                                                        const EvalState& s) const {
  return impl_->settled(impl_->roots.at(which), s);
}

PositionSet ExpressionAutomaton::atom_positions(std::size_t atom, const EvalState& s) const {
  const auto& at = impl_->atoms.at(atom);
  PositionSet out(at.length + 1);
  for (std::size_t i = 0; i <= at.length; ++i) {
    if (bit(s.words.data() + at.offset, i)) out.set(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Breadth-first search

namespace {

struct SearchNode {
  const EvalState* state;
  std::size_t parent;
  std::size_t symbol;
  std::size_t depth;
};

// Explores the deduplicated state graph in breadth-first order, expanding
// symbols in alphabet order. Returns the index of the first node satisfying
// `goal`, or nullopt when the graph (restricted to max_len and to nodes not
// rejected by `prune`) is exhausted.
template <typename Goal, typename Prune>
SearchOutcome breadth_first(const ExpressionAutomaton& automaton, Goal goal, Prune prune,
                            const SearchOptions& options, Verdict exhausted) {
  std::unordered_map<EvalState, std::size_t, EvalStateHash> seen;
  std::vector<SearchNode> nodes;

  auto discover = [&](EvalState s, std::size_t parent, std::size_t symbol, std::size_t depth) {
    auto [it, inserted] = seen.emplace(std::move(s), nodes.size());
    if (!inserted) return;
    if (nodes.size() >= options.state_budget) {
      throw BudgetExceeded(nodes.size() + 1, options.state_budget);
    }
    nodes.push_back({&it->first, parent, symbol, depth});
  };

  discover(automaton.initial(), 0, 0, 0);
  const std::size_t sigma = automaton.alphabet().size();
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const SearchNode node = nodes[head];
    if (goal(*node.state)) {
      Text text(node.depth, automaton.alphabet()[0]);
      for (std::size_t i = head, d = node.depth; d > 0; i = nodes[i].parent) {
        text[--d] = automaton.alphabet()[nodes[i].symbol];
      }
      return SearchOutcome{Verdict::kFound, std::move(text), nodes.size()};
    }
    if (prune(*node.state)) continue;
    if (options.max_len && node.depth >= *options.max_len) continue;
    for (std::size_t x = 0; x < sigma; ++x) {
      discover(automaton.step(*node.state, x), head, x, node.depth + 1);
    }
  }
  return SearchOutcome{exhausted, std::nullopt, nodes.size()};
}

}  // namespace

SearchOutcome find_witness(const LikeExpression& e, const Alphabet& sigma,
                           const SearchOptions& options) {
  SearchOptions opts = options;
  if (!opts.max_len && is_monotone(e)) opts.max_len = expression_size(e);
  ExpressionAutomaton automaton({e}, sigma);
  return breadth_first(
      automaton, [&](const EvalState& s) { return automaton.value(0, s); },
      [&](const EvalState& s) {
        return automaton.settled(0, s) == ExpressionAutomaton::Truth::kFalse;
      },
      opts, Verdict::kExhaustedEmpty);
}

SearchOutcome find_separating_string(const LikeExpression& e1, const LikeExpression& e2,
                                     const Alphabet& sigma, const SearchOptions& options) {
  using Truth = ExpressionAutomaton::Truth;
  ExpressionAutomaton automaton({e1, e2}, sigma);
  return breadth_first(
      automaton, [&](const EvalState& s) { return automaton.value(0, s) != automaton.value(1, s); },
      [&](const EvalState& s) {
        Truth a = automaton.settled(0, s);
        return a != Truth::kUnknown && a == automaton.settled(1, s);
      },
      options, Verdict::kExhaustedEquivalent);
}

bool decide_equivalence(const LikeExpression& e1, const LikeExpression& e2, const Alphabet& sigma,
                        const SearchOptions& options) {
  return find_separating_string(e1, e2, sigma, options).verdict == Verdict::kExhaustedEquivalent;
}

}  // namespace likepat
