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

// Full-string LIKE matching.
//
// match_greedy is the production matcher: after normalization a pattern
// containing `%` has the shape a1 % a2 % ... % an with every ai free of `%`.
// The anchored first factor is checked at the start of the text, the
// anchored last factor against the suffix, and each interior factor is placed
// at its leftmost occurrence after the previous one. Moving a factor to an
// earlier occurrence never invalidates a match of the factors after it, so
// the leftmost placement is as good as any.
//
// match_oracle is an independent dynamic program over
// (pattern position x text position) used to cross-check the greedy matcher.

#ifndef LIKEPAT_MATCHER_HPP_
#define LIKEPAT_MATCHER_HPP_

#include <vector>

#include "likepat/pattern.hpp"

namespace likepat {

struct Segments {
  // Maximal `%`-free factors. Leading/trailing `%` are recorded through the
  // anchors instead of as empty parts, so a lone `%` has no parts.
  std::vector<Pattern> parts;
  bool anchored_start = true;
  bool anchored_end = true;

  // Rebuilds the normalized pattern the segments were taken from.
  Pattern reconstruct() const;

  friend bool operator==(const Segments&, const Segments&) = default;
};

// Normalizes `p` first, so any pattern is accepted.
Segments split_segments(const Pattern& p);

bool match_oracle(const Pattern& p, const Text& t);
bool match_greedy(const Pattern& p, const Text& t);

}  // namespace likepat

#endif  // LIKEPAT_MATCHER_HPP_
