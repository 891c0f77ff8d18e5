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

#include "likepat/turing.hpp"

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "likepat/errors.hpp"

namespace likepat {
namespace {

bool contains(const std::vector<std::string>& v, const std::string& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

void require_unique(const std::vector<std::string>& v, const char* what) {
  std::set<std::string> seen;
  for (const auto& x : v) {
    if (x.empty()) throw Error(std::string("empty name in ") + what);
    if (!seen.insert(x).second) {
      throw Error(std::string("duplicate '") + x + "' in " + what);
    }
  }
}

// Tape contents, head and state flattened to `u q v`.
std::vector<std::string> configuration(const std::vector<std::string>& tape, std::size_t head,
                                       const std::string& state) {
  std::vector<std::string> c(tape.begin(), tape.begin() + static_cast<std::ptrdiff_t>(head));
  c.push_back(state);
  c.insert(c.end(), tape.begin() + static_cast<std::ptrdiff_t>(head), tape.end());
  return c;
}

}  // namespace

void TmSpec::validate() const {
  require_unique(states, "states");
  require_unique(tape_alphabet, "tape_alphabet");
  require_unique(input_alphabet, "input_alphabet");
  if (states.empty()) throw Error("machine has no states");
  if (!contains(tape_alphabet, std::string(kBlank))) {
    throw Error("tape_alphabet must contain " + std::string(kBlank));
  }
  for (const auto& a : input_alphabet) {
    if (!contains(tape_alphabet, a)) {
      throw Error("input symbol '" + a + "' is not a tape symbol");
    }
    if (a == kBlank) throw Error("blank cannot be an input symbol");
  }
  for (const auto& q : states) {
    if (contains(tape_alphabet, q)) {
      throw Error("'" + q + "' is both a state and a tape symbol");
    }
  }
  for (const auto& name : states) {
    if (name == kSeparator) throw Error("'#' is reserved as separator");
  }
  for (const auto& name : tape_alphabet) {
    if (name == kSeparator) throw Error("'#' is reserved as separator");
  }
  if (!contains(states, start)) throw Error("unknown start state '" + start + "'");
  if (!contains(states, accept)) throw Error("unknown accept state '" + accept + "'");
  for (const auto& [key, t] : delta) {
    const auto& [q, read] = key;
    if (!contains(states, q) || !contains(states, t.next)) {
      throw Error("transition refers to an unknown state");
    }
    if (!contains(tape_alphabet, read) || !contains(tape_alphabet, t.write)) {
      throw Error("transition refers to an unknown tape symbol");
    }
    if (q == accept) throw Error("accept state must not have transitions");
  }
}

const TmTransition* TmSpec::find(const std::string& state, const std::string& read) const {
  auto it = delta.find({state, read});
  return it == delta.end() ? nullptr : &it->second;
}

TmSpec parse_machine(std::string_view json) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("bad machine JSON: ") + e.what(), e.byte);
  }
  TmSpec m;
  try {
    m.states = doc.at("states").get<std::vector<std::string>>();
    m.tape_alphabet = doc.at("tape_alphabet").get<std::vector<std::string>>();
    m.input_alphabet = doc.at("input_alphabet").get<std::vector<std::string>>();
    m.start = doc.at("start").get<std::string>();
    m.accept = doc.at("accept").get<std::string>();
    for (const auto& rule : doc.at("delta")) {
      const std::string move = rule.at("move").get<std::string>();
      if (move != "L" && move != "R") throw Error("move must be \"L\" or \"R\"");
      TmTransition t{rule.at("next").get<std::string>(), rule.at("write").get<std::string>(),
                     move == "L" ? Move::kLeft : Move::kRight};
      auto key =
          std::make_pair(rule.at("state").get<std::string>(), rule.at("read").get<std::string>());
      if (!m.delta.emplace(key, t).second) {
        throw Error("machine is not deterministic on (" + key.first + ", " + key.second + ")");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad machine description: ") + e.what());
  }
  m.validate();
  return m;
}

TmSpec load_machine(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open machine file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_machine(buf.str());
}

TmRunResult simulate_tm(const TmSpec& m, const Text& input, std::size_t space,
                        std::optional<std::size_t> step_cap) {
  m.validate();
  if (space == 0) throw Error("space must be positive");
  if (input.size() > space) throw Error("input longer than the space bound");
  std::vector<std::string> tape(space, std::string(kBlank));
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (!contains(m.input_alphabet, input[i].token())) {
      throw Error("'" + input[i].token() + "' is not an input symbol");
    }
    tape[i] = input[i].token();
  }

  TmRunResult result;
  const Symbol separator{std::string(kSeparator)};
  auto record = [&](const std::vector<std::string>& config) {
    for (const auto& s : config) result.history.emplace_back(s);
    result.history.push_back(separator);
  };

  std::size_t head = 0;
  std::string state = m.start;
  std::set<std::vector<std::string>> seen;
  auto config = configuration(tape, head, state);
  seen.insert(config);
  result.history.push_back(separator);
  record(config);

  while (true) {
    if (state == m.accept) {
      result.accepted = head == 0 && std::all_of(tape.begin(), tape.end(),
                                                 [](const auto& s) { return s == kBlank; });
      return result;
    }
    if (step_cap && result.steps >= *step_cap) return result;
    const TmTransition* t = m.find(state, tape[head]);
    if (t == nullptr) return result;
    if (t->move == Move::kLeft && head == 0) return result;
    if (t->move == Move::kRight && head + 1 == space) return result;
    tape[head] = t->write;
    head = t->move == Move::kLeft ? head - 1 : head + 1;
    state = t->next;
    config = configuration(tape, head, state);
    if (!seen.insert(config).second) return result;
    ++result.steps;
    record(config);
  }
}

Encoding encode_tm(const TmSpec& m, const Text& input, std::size_t space,
                   const TmEncodingOptions& options) {
  m.validate();
  if (space == 0) throw Error("space must be positive");
  if (input.size() > space) throw Error("input longer than the space bound");
  for (const auto& s : input) {
    if (!contains(m.input_alphabet, s.token())) {
      throw Error("'" + s.token() + "' is not an input symbol");
    }
  }

  const std::size_t s = space;
  const std::size_t transition_gap = options.transition_gap.value_or(s - 1);
  const std::size_t inertia_gap = options.inertia_gap.value_or(s);

  std::vector<Symbol> all;       // Γ, then Q, then #
  std::vector<Symbol> tape_sep;  // Γ ∪ {#}
  for (const auto& a : m.tape_alphabet) all.emplace_back(a);
  for (const auto& q : m.states) all.emplace_back(q);
  const Symbol sep{std::string(kSeparator)};
  all.push_back(sep);
  for (const auto& a : m.tape_alphabet) tape_sep.emplace_back(a);
  tape_sep.push_back(sep);
  const Symbol blank{std::string(kBlank)};

  std::vector<LikeExpression> conditions;
  auto exclude = [&](std::vector<PatternToken> tokens) {
    conditions.push_back(
        LikeExpression::negation(LikeExpression::atom(Pattern(std::move(tokens)))));
  };
  // % w1 w2 ... %
  auto exclude_factor = [&](std::vector<PatternToken> factor) {
    factor.insert(factor.begin(), AnyString{});
    factor.emplace_back(AnyString{});
    exclude(std::move(factor));
  };
  auto gap = [](std::size_t n) { return std::vector<PatternToken>(n, AnyOne{}); };
  auto cat = [](std::vector<PatternToken> a, const std::vector<PatternToken>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };

  // Start and accepting blocks, one wrong symbol per position.
  std::vector<Symbol> start_block{sep, Symbol(m.start)};
  for (const auto& x : input) start_block.push_back(x);
  while (start_block.size() < s + 2) start_block.push_back(blank);
  start_block.push_back(sep);
  std::vector<Symbol> accept_block{sep, Symbol(m.accept)};
  while (accept_block.size() < s + 2) accept_block.push_back(blank);
  accept_block.push_back(sep);

  for (std::size_t i = 0; i < start_block.size(); ++i) {
    for (const auto& x : all) {
      if (x == start_block[i]) continue;
      exclude(cat(cat(gap(i), {x}), {AnyString{}}));
    }
  }
  for (std::size_t i = 0; i < accept_block.size(); ++i) {
    const Symbol& expected = accept_block[accept_block.size() - 1 - i];
    for (const auto& x : all) {
      if (x == expected) continue;
      exclude(cat({AnyString{}, x}, gap(i)));
    }
  }

  // Texts shorter than one full block # c #.
  for (std::size_t j = 0; j < s + 3; ++j) exclude(gap(j));

  // Nothing follows the accepting configuration.
  exclude(cat(cat({AnyString{}, Symbol(m.accept)}, gap(s + 2)), {AnyString{}}));

  for (const auto& q : m.states) {
    // The head never sits past the last cell.
    exclude_factor({Symbol(q), sep});
    if (q == m.accept) continue;
    for (const auto& b : m.tape_alphabet) {
      const TmTransition* t = m.find(q, b);
      if (t == nullptr) {
        // Halting without acceptance.
        exclude_factor({Symbol(q), Symbol(b)});
        continue;
      }
      if (t->move == Move::kLeft) {
        // Falling off the left end.
        exclude_factor({sep, Symbol(q), Symbol(b)});
      }
      for (const auto& a : tape_sep) {
        if (t->move == Move::kLeft && a == sep) continue;
        const std::array<Symbol, 3> image =
            t->move == Move::kLeft ? std::array<Symbol, 3>{Symbol(t->next), a, Symbol(t->write)}
                                   : std::array<Symbol, 3>{a, Symbol(t->write), Symbol(t->next)};
        const std::vector<PatternToken> window{a, Symbol(q), Symbol(b)};
        if (options.split_windows) {
          for (std::size_t o = 0; o < 3; ++o) {
            for (const auto& x : all) {
              if (x == image[o]) continue;
              exclude_factor(cat(cat(window, gap(transition_gap + o)), {x}));
            }
          }
        } else {
          for (const auto& d : all) {
            for (const auto& e : all) {
              for (const auto& f : all) {
                if (d == image[0] && e == image[1] && f == image[2]) continue;
                exclude_factor(cat(cat(window, gap(transition_gap)), {d, e, f}));
              }
            }
          }
        }
      }
    }
  }

  // Cells away from the head keep their symbol.
  for (const auto& a : tape_sep) {
    for (const auto& b : tape_sep) {
      for (const auto& c : tape_sep) {
        for (const auto& d : all) {
          if (d == b) continue;
          exclude_factor(cat(cat({a, b, c}, gap(inertia_gap)), {d}));
        }
      }
    }
  }

  return Encoding{LikeExpression::conjunction(std::move(conditions)), Alphabet(std::move(all))};
}

}  // namespace likepat
