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

#ifndef LIKEPAT_NORMALIZE_HPP_
#define LIKEPAT_NORMALIZE_HPP_

#include "likepat/pattern.hpp"

namespace likepat {

// True iff no `%` is immediately followed by `_` or by another `%`.
bool is_normalized(const Pattern& p);

// Rewrites every maximal run of wildcards into its `_` tokens followed by a
// single `%` when the run contained one. Literals pass through unchanged.
Pattern normalize(const Pattern& p);

}  // namespace likepat

#endif  // LIKEPAT_NORMALIZE_HPP_
