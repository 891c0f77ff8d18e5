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

// Deterministic space-bounded Turing machines: a direct simulator and the
// encoding of an accepting computation history as a LIKE expression built
// only from negated conditions.
//
// A configuration u q v is written as the tape symbols of u, the state q and
// the tape symbols of v, head on the first symbol of v. With `space` tape
// cells every configuration has space + 1 symbols, and a run of k steps is
// the text  # c0 # c1 # ... # ck #.  A machine accepts when it enters its
// accept state with a blank tape and the head on the leftmost cell.

#ifndef LIKEPAT_TURING_HPP_
#define LIKEPAT_TURING_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "likepat/expression.hpp"
#include "likepat/pattern.hpp"
#include "likepat/reductions.hpp"

namespace likepat {

inline constexpr std::string_view kBlank = "_blank";
inline constexpr std::string_view kSeparator = "#";

enum class Move { kLeft, kRight };

struct TmTransition {
  std::string next;
  std::string write;
  Move move = Move::kRight;
};

struct TmSpec {
  std::vector<std::string> states;
  std::vector<std::string> tape_alphabet;  // includes kBlank
  std::vector<std::string> input_alphabet;
  std::string start;
  std::string accept;
  // (state, read) -> transition
  std::map<std::pair<std::string, std::string>, TmTransition> delta;

  // Throws Error when the description is inconsistent.
  void validate() const;
  const TmTransition* find(const std::string& state, const std::string& read) const;
};

// JSON document: {"states": [...], "tape_alphabet": [...],
// "input_alphabet": [...], "start": q, "accept": q,
// "delta": [{"state", "read", "next", "write", "move": "L"|"R"}, ...]}.
TmSpec parse_machine(std::string_view json);
TmSpec load_machine(const std::string& path);

struct TmRunResult {
  bool accepted = false;
  // # c0 # c1 # ... # ck # for the configurations actually visited.
  Text history;
  std::size_t steps = 0;
};

// Runs on exactly `space` cells. Rejects when no transition applies, when
// the head would leave the tape, when a configuration repeats, when the
// accept state is entered with a non-blank tape or the head elsewhere, or
// after `step_cap` steps. Throws Error if |input| > space or an input symbol
// is not in the input alphabet.
TmRunResult simulate_tm(const TmSpec& m, const Text& input, std::size_t space,
                        std::optional<std::size_t> step_cap = std::nullopt);

struct TmEncodingOptions {
  // Wildcards between a transition window and the first symbol of its image
  // in the next configuration. Default space - 1.
  std::optional<std::size_t> transition_gap;
  // Wildcards between an unaffected window and the image of its middle
  // symbol. Default space.
  std::optional<std::size_t> inertia_gap;
  // Exclude wrong image symbols one position at a time instead of
  // enumerating every wrong three-symbol image. Same language, far fewer
  // atoms.
  bool split_windows = true;
};

// A conjunction of negated atoms whose only model is simulate_tm's history
// when the machine accepts within `space`, and which is empty otherwise.
// The alphabet is the tape alphabet, then the states, then kSeparator.
Encoding encode_tm(const TmSpec& m, const Text& input, std::size_t space,
                   const TmEncodingOptions& options = {});

}  // namespace likepat

#endif  // LIKEPAT_TURING_HPP_
