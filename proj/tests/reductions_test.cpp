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

#include "likepat/reductions.hpp"

#include <string>

#include "gtest/gtest.h"
#include "likepat/automata.hpp"
#include "likepat/errors.hpp"
#include "likepat/matcher.hpp"
#include "oracles.hpp"

namespace likepat {
namespace {

using testing::chars;
using testing::for_each_text;
using testing::pat;

std::size_t count_ones(const Text& t) {
  std::size_t n = 0;
  for (const auto& s : t) n += s.token() == "1";
  return n;
}

TEST(MajorityTest, Examples) {
  EXPECT_EQ(encode_majority(1), pat("%1%"));
  EXPECT_EQ(encode_majority(3), pat("%1%1%"));
  EXPECT_EQ(encode_majority(4), pat("%1%1%1%"));
  EXPECT_THROW(encode_majority(0), Error);
}

TEST(MajorityTest, ExhaustiveUpToTwelve) {
  Alphabet sigma = chars("01");
  for (std::size_t n = 1; n <= 12; ++n) {
    Pattern p = encode_majority(n);
    for_each_text(sigma, n, [&](const Text& t) {
      if (t.size() != n) return;
      ASSERT_EQ(match_greedy(p, t), 2 * count_ones(t) > n) << n;
    });
  }
}

TEST(DimacsTest, ParsesCommentsAndMultilineClauses) {
  Cnf f = parse_dimacs("c a comment\np cnf 3 2\n1 -2\n 3 0 -1 2 -3 0\n%\n0\n");
  EXPECT_EQ(f.n_vars, 3u);
  ASSERT_EQ(f.clauses.size(), 2u);
  EXPECT_EQ(f.clauses[0][1], (CnfLiteral{2, true}));
  EXPECT_EQ(f.clauses[1][2], (CnfLiteral{3, true}));
}

TEST(DimacsTest, RoundTrip) {
  testing::Random rng(41);
  for (int i = 0; i < 100; ++i) {
    Cnf f = rng.cnf(1 + rng.below(5), 1 + rng.below(6));
    Cnf g = parse_dimacs(to_dimacs(f));
    EXPECT_EQ(g.n_vars, f.n_vars);
    EXPECT_EQ(g.clauses, f.clauses);
  }
}

TEST(DimacsTest, Errors) {
  EXPECT_THROW(parse_dimacs("1 2 3 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 3 1\n1 2 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 3 1\n1 2 4 0\n"), Error);
  EXPECT_THROW(parse_dimacs("p cnf 3 2\n1 2 3 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 3 1\n1 2 x 0\n"), ParseError);
}

TEST(ThreeSatTest, EncodingShape) {
  Cnf f{2, {{CnfLiteral{1, false}, CnfLiteral{2, true}, CnfLiteral{2, false}}}};
  auto enc = encode_3sat(f);
  EXPECT_TRUE(is_monotone(enc.expression));
  EXPECT_EQ(enc.alphabet.size(), 4u);
  EXPECT_EQ(enc.alphabet[0], Symbol("x1"));
  EXPECT_EQ(enc.alphabet[2], Symbol("~x1"));
  EXPECT_EQ(render_expression(enc.expression, std::nullopt, SyntaxMode::kTokens),
            R"(LIKE "_ _" AND (LIKE "% x1 %" OR LIKE "% ~x1 %") AND )"
            R"((LIKE "% x2 %" OR LIKE "% ~x2 %") AND )"
            R"((LIKE "% x1 %" OR LIKE "% ~x2 %" OR LIKE "% x2 %"))");
}

TEST(ThreeSatTest, FaithfulOnRandomInstances) {
  testing::Random rng(43);
  for (int i = 0; i < 150; ++i) {
    Cnf f = rng.cnf(1 + rng.below(4), 1 + rng.below(6));
    auto enc = encode_3sat(f);
    auto r = find_witness(enc.expression, enc.alphabet);
    auto expected = testing::brute_force_sat(f);
    ASSERT_EQ(r.verdict == Verdict::kFound, expected.has_value()) << to_dimacs(f);
    if (!expected) continue;
    ASSERT_EQ(r.text->size(), f.n_vars);
    auto a = decode_assignment(*r.text, f);
    ASSERT_TRUE(a);
    ASSERT_TRUE(f.satisfied_by(*a));
  }
}

TEST(ThreeSatTest, UnsatisfiableInstance) {
  // All eight sign patterns over three variables.
  std::string text = "p cnf 3 8\n";
  for (int mask = 0; mask < 8; ++mask) {
    for (int v = 1; v <= 3; ++v) {
      text += std::to_string((mask >> (v - 1)) & 1 ? -v : v) + " ";
    }
    text += "0\n";
  }
  Cnf f = parse_dimacs(text);
  ASSERT_FALSE(testing::brute_force_sat(f));
  auto enc = encode_3sat(f);
  EXPECT_EQ(find_witness(enc.expression, enc.alphabet).verdict, Verdict::kExhaustedEmpty);
}

TEST(DecodeAssignmentTest, Examples) {
  Cnf f{2, {{CnfLiteral{1, false}, CnfLiteral{1, false}, CnfLiteral{2, false}}}};
  auto t = parse_text("~x2 x1", SyntaxMode::kTokens);
  EXPECT_EQ(decode_assignment(t, f), (std::vector<bool>{true, false}));
  EXPECT_FALSE(decode_assignment(parse_text("x1 ~x1", SyntaxMode::kTokens), f));
  EXPECT_FALSE(decode_assignment(parse_text("x1", SyntaxMode::kTokens), f));
}

}  // namespace
}  // namespace likepat
