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

#include "cli.hpp"

#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "nlohmann/json.hpp"

namespace likepat::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) {
  return std::string(LIKEPAT_TEST_DATA_DIR) + "/" + name;
}

TEST(CliTest, Match) {
  auto r = call({"match", "--pattern", "%0%1%", "--text", "021", "--alphabet", "012"});
  EXPECT_EQ(r.code, kPositive);
  EXPECT_EQ(r.out, "MATCH\n");
  for (const char* algo : {"greedy", "oracle", "nfa"}) {
    r = call({"match", "--pattern", "%01%", "--text", "021", "--algo", algo});
    EXPECT_EQ(r.code, kNegative) << algo;
    EXPECT_EQ(r.out, "NO MATCH\n");
  }
  r = call({"match", "--pattern", "a", "--text", "b", "--alphabet", "a"});
  EXPECT_EQ(r.code, kUsage);
}

TEST(CliTest, NormalizeAndRegex) {
  EXPECT_EQ(call({"normalize", "--pattern", "%%_"}).out, "_%\n");
  EXPECT_EQ(call({"to-regex", "--pattern", "%01%", "--alphabet", "01"}).out, "(0+1)*01(0+1)*\n");
  EXPECT_EQ(call({"normalize", "--pattern", "a\\%%_", "--escape", "\\"}).out, "a\\%_%\n");
}

TEST(CliTest, EvalAndDnf) {
  auto r = call({"eval", "--expr", R"(LIKE "0%" AND NOT LIKE "%1")", "--text", "00"});
  EXPECT_EQ(r.code, kPositive);
  EXPECT_EQ(r.out, "TRUE\n");
  r = call({"dnf", "--expr", R"(LIKE "0_")", "--alphabet", "01"});
  EXPECT_EQ(r.out, "LIKE \"00\" OR LIKE \"01\"\n");
  r = call({"dnf", "--expr", R"(LIKE "____")", "--alphabet", "01", "--cap", "4"});
  EXPECT_EQ(r.code, kResource);
}

TEST(CliTest, Equivalence) {
  auto r = call({"equiv", "--e1", R"(LIKE "%01%")", "--e2", R"(LIKE "%0%1%")", "--alphabet", "01"});
  EXPECT_EQ(r.code, kPositive);
  EXPECT_EQ(r.out, "EQUIVALENT\n");
  r = call({"equiv", "--e1", R"(LIKE "%01%")", "--e2", R"(LIKE "%0%1%")", "--alphabet", "012"});
  EXPECT_EQ(r.code, kNegative);
  EXPECT_EQ(r.out, "SEPARATED \"021\"\n");
}

TEST(CliTest, NonemptyJsonWitnessVerifies) {
  const std::string expr = R"(LIKE "%1%" AND NOT LIKE "1%" AND LIKE "%0")";
  auto r = call({"nonempty", "--expr", expr, "--alphabet", "01", "--json"});
  EXPECT_EQ(r.code, kPositive);
  auto report = nlohmann::json::parse(r.out);
  EXPECT_EQ(report["verdict"], "WITNESS");
  EXPECT_EQ(report["command"], "nonempty");
  EXPECT_TRUE(report.contains("elapsed_ms"));
  const std::string w = report["witness"];
  EXPECT_EQ(w, "010");
  EXPECT_EQ(call({"eval", "--expr", expr, "--text", w}).code, kPositive);

  r = call({"nonempty", "--expr", R"(LIKE "0" AND LIKE "1")", "--alphabet", "01"});
  EXPECT_EQ(r.code, kNegative);
  EXPECT_EQ(r.out, "EMPTY\n");
}

TEST(CliTest, BudgetExhaustionIsAResourceError) {
  auto r = call({"nonempty", "--expr", R"(LIKE "%0101%" AND LIKE "%1010%")", "--alphabet", "01",
                 "--budget", "2"});
  EXPECT_EQ(r.code, kResource);
}

TEST(CliTest, Reductions) {
  EXPECT_EQ(call({"reduce", "majority", "--n", "3"}).out, "%1%1%\n");
  auto r = call({"reduce", "3sat", "--dimacs", data("tiny.cnf")});
  EXPECT_EQ(r.code, kPositive);
  EXPECT_NE(r.out.find("LIKE \"_ _ _\" AND"), std::string::npos);

  r = call({"reduce", "tm", "--machine", data("erase_one.json"), "--input", "1", "--space", "2",
            "--json"});
  EXPECT_EQ(r.code, kPositive);
  auto report = nlohmann::json::parse(r.out);
  EXPECT_TRUE(report["tokens"].get<bool>());
  EXPECT_GT(report["atoms"].get<int>(), 0);
}

TEST(CliTest, SimulateTm) {
  auto r =
      call({"simulate", "tm", "--machine", data("erase_one.json"), "--input", "1", "--space", "2"});
  EXPECT_EQ(r.code, kPositive);
  EXPECT_EQ(r.out, "# q0 1 _blank # _blank q1 _blank # qa _blank _blank #\n");
  r = call({"simulate", "tm", "--machine", data("erase_one.json"), "--input", "1", "--space", "1"});
  EXPECT_EQ(r.code, kNegative);
  EXPECT_EQ(r.out, "REJECT\n");
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(call({}).code, kUsage);
  EXPECT_EQ(call({"frobnicate"}).code, kUsage);
  EXPECT_EQ(call({"match", "--pattern", "a"}).code, kUsage);
  EXPECT_EQ(call({"eval", "--expr", "LIKE", "--text", "a"}).code, kUsage);
  EXPECT_EQ(call({"--help"}).code, kPositive);
}

}  // namespace
}  // namespace likepat::cli
