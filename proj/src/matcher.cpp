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

#include "likepat/matcher.hpp"

#include <cstddef>
#include <optional>

#include "likepat/normalize.hpp"

namespace likepat {
namespace {

// Whether the %-free `part` matches t[at, at + |part|).
bool matches_at(const Pattern& part, const Text& t, std::size_t at) {
  if (at + part.size() > t.size()) return false;
  for (std::size_t i = 0; i < part.size(); ++i) {
    if (!consumes(part[i], t[at + i])) return false;
  }
  return true;
}

// Leftmost start s >= from with s + |part| <= limit where `part` matches.
std::optional<std::size_t> leftmost_occurrence(const Pattern& part, const Text& t, std::size_t from,
                                               std::size_t limit) {
  for (std::size_t s = from; s + part.size() <= limit; ++s) {
    if (matches_at(part, t, s)) return s;
  }
  return std::nullopt;
}

}  // namespace

Pattern Segments::reconstruct() const {
  std::vector<PatternToken> out;
  if (!anchored_start) out.emplace_back(AnyString{});
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out.emplace_back(AnyString{});
    out.insert(out.end(), parts[i].begin(), parts[i].end());
  }
  if (!anchored_end && !parts.empty()) out.emplace_back(AnyString{});
  return Pattern(std::move(out));
}

Segments split_segments(const Pattern& p) {
  Pattern n = normalize(p);
  Segments seg;
  if (!n.has_any_string()) {
    if (!n.empty()) seg.parts.push_back(n);
    return seg;
  }
  seg.anchored_start = !is_any_string(n[0]);
  seg.anchored_end = !is_any_string(n[n.size() - 1]);
  std::vector<PatternToken> current;
  for (const auto& t : n) {
    if (is_any_string(t)) {
      if (!current.empty()) seg.parts.emplace_back(std::move(current));
      current.clear();
    } else {
      current.push_back(t);
    }
  }
  if (!current.empty()) seg.parts.emplace_back(std::move(current));
  return seg;
}

bool match_oracle(const Pattern& p, const Text& t) {
  const std::size_t m = p.size();
  const std::size_t n = t.size();
  // reach[i][j]: the first i tokens can match the first j symbols.
  std::vector<std::vector<char>> reach(m + 1, std::vector<char>(n + 1, 0));
  reach[0][0] = 1;
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      if (!reach[i][j] || i == m) continue;
      if (is_any_string(p[i])) {
        reach[i + 1][j] = 1;
        if (j < n) reach[i][j + 1] = 1;
      } else if (j < n && consumes(p[i], t[j])) {
        reach[i + 1][j + 1] = 1;
      }
    }
  }
  return reach[m][n] != 0;
}

bool match_greedy(const Pattern& p, const Text& t) {
  Segments seg = split_segments(p);
  if (seg.anchored_start && seg.anchored_end && seg.parts.size() <= 1) {
    // No `%`: position-wise comparison.
    const Pattern empty;
    const Pattern& whole = seg.parts.empty() ? empty : seg.parts.front();
    return whole.size() == t.size() && matches_at(whole, t, 0);
  }

  std::size_t first = 0;
  std::size_t last = seg.parts.size();
  std::size_t pos = 0;
  std::size_t limit = t.size();

  if (seg.anchored_start) {
    const Pattern& head = seg.parts[first++];
    if (!matches_at(head, t, 0)) return false;
    pos = head.size();
  }
  if (seg.anchored_end) {
    const Pattern& tail = seg.parts[--last];
    if (tail.size() > t.size() || t.size() - tail.size() < pos) return false;
    limit = t.size() - tail.size();
    if (!matches_at(tail, t, limit)) return false;
  }
  for (std::size_t i = first; i < last; ++i) {
    auto at = leftmost_occurrence(seg.parts[i], t, pos, limit);
    if (!at) return false;
    pos = *at + seg.parts[i].size();
  }
  return true;
}

}  // namespace likepat
