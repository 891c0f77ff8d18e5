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

#include "likepat/normalize.hpp"

#include <cstddef>
#include <vector>

namespace likepat {

bool is_normalized(const Pattern& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (is_any_string(p[i]) && !is_literal(p[i + 1])) return false;
  }
  return true;
}

Pattern normalize(const Pattern& p) {
  std::vector<PatternToken> out;
  out.reserve(p.size());
  std::size_t pending_any_one = 0;
  bool pending_any_string = false;

  auto flush = [&] {
    out.insert(out.end(), pending_any_one, AnyOne{});
    if (pending_any_string) out.emplace_back(AnyString{});
    pending_any_one = 0;
    pending_any_string = false;
  };

  for (const auto& t : p) {
    if (is_any_one(t)) {
      ++pending_any_one;
    } else if (is_any_string(t)) {
      pending_any_string = true;
    } else {
      flush();
      out.push_back(t);
    }
  }
  flush();
  return Pattern(std::move(out));
}

}  // namespace likepat
