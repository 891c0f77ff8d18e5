# Copyright 2026 The likepat Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""SQL LIKE patterns, LIKE expressions and their decision procedures."""

from likepat._likepat import (
    BudgetExceeded,
    CapExceeded,
    Expression,
    LikeError,
    ParseError,
    Pattern,
    SearchResult,
    decode_assignment,
    encode_3sat,
    encode_majority,
    encode_tm,
    equivalent,
    find_separating_string,
    find_witness,
    simulate_tm,
)

__all__ = [
    "BudgetExceeded",
    "CapExceeded",
    "Expression",
    "LikeError",
    "ParseError",
    "Pattern",
    "SearchResult",
    "decode_assignment",
    "encode_3sat",
    "encode_majority",
    "encode_tm",
    "equivalent",
    "find_separating_string",
    "find_witness",
    "simulate_tm",
]
