// Copyright 2026 The digraph-le Authors
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


#include <gtest/gtest.h>

#include <random>
#include <string>

#include "dle/errors.hpp"
#include "dle/families.hpp"
#include "dle/io.hpp"
#include "support/oracles.hpp"

namespace dle {
namespace {

int parse_error_line(const std::string& text) {
  try {
    parse_arclist(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(Io, ArclistFormat) {
  EXPECT_EQ(to_arclist(gen_fnk(4, 3, 2)), "DIGRAPH 4 9\n0 1\n0 2\n0 3\n1 0\n1 2\n1 3\n2 0\n2 1\n2 3\n");
}

TEST(Io, ArclistRoundTrip) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 300; ++t) {
    const Digraph g = testing::random_digraph(rng, 1 + t % 64, 0.2);
    ASSERT_EQ(parse_arclist(to_arclist(g)), g);
  }
}

TEST(Io, ArclistAcceptsUnsortedArcsAndTrailingBlankLines) {
  EXPECT_EQ(parse_arclist("DIGRAPH 3 2\n2 0\r\n0 1\n\n  \n"), build_digraph(3, {{0, 1}, {2, 0}}));
  EXPECT_EQ(parse_arclist("DIGRAPH 1 0\n"), build_digraph(1, {}));
}

TEST(Io, ArclistErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line(""), 1);
  EXPECT_EQ(parse_error_line("GRAPH 3 1\n0 1\n"), 1);
  EXPECT_EQ(parse_error_line("DIGRAPH 3\n"), 1);
  EXPECT_EQ(parse_error_line("DIGRAPH 0 0\n"), 1);
  EXPECT_EQ(parse_error_line("DIGRAPH 65 0\n"), 1);
  EXPECT_EQ(parse_error_line("DIGRAPH -3 0\n"), 1);
  EXPECT_EQ(parse_error_line("DIGRAPH 3 2\n0 1\n"), 3);         // missing arc
  EXPECT_EQ(parse_error_line("DIGRAPH 3 2\n0 1\n1 3\n"), 3);    // vertex out of range
  EXPECT_EQ(parse_error_line("DIGRAPH 3 2\n0 1\n2 2\n"), 3);    // loop
  EXPECT_EQ(parse_error_line("DIGRAPH 3 2\n0 1\n0 1\n"), 3);    // duplicate
  EXPECT_EQ(parse_error_line("DIGRAPH 3 1\n0 x\n"), 2);
  EXPECT_EQ(parse_error_line("DIGRAPH 3 1\n0 1 2\n"), 2);
  EXPECT_EQ(parse_error_line("DIGRAPH 3 1\n0 1\n1 2\n"), 3);    // extra arc
}

TEST(Io, DotListsVerticesAndArcs) {
  const std::string dot = to_dot(build_digraph(2, {{0, 1}}));
  EXPECT_EQ(dot, "digraph G {\n  0;\n  1;\n  0 -> 1;\n}\n");
}

TEST(Io, DotLabelsBlocks) {
  const FamilySpec spec = parse_family_spec("fnk:n=4,k=3,s=2");
  const std::string dot = to_dot(realize(spec), block_assignment(spec));
  EXPECT_NE(dot.find("0 [label=\"0 (V1)\"]"), std::string::npos);
  EXPECT_NE(dot.find("3 [label=\"3 (V2)\"]"), std::string::npos);
  EXPECT_NE(dot.find("2 -> 3;"), std::string::npos);
}

TEST(Io, JsonDocuments) {
  const Json g = to_json(build_digraph(2, {{0, 1}}));
  EXPECT_EQ(g.dump(), R"({"schema":1,"n":2,"e":1,"arcs":[[0,1]]})");
  const Json m = to_json(measure(gen_fnk(5, 2, 3)));
  EXPECT_EQ(m.dump(), R"({"schema":1,"le":44,"m1":40,"c2":4,"e":12,"degseq":[4,4,2,2,0]})");
  const Json v = to_json(ex_le_ck(4, 3));
  EXPECT_EQ(v.dump(), R"({"value":33,"numerator":198,"denominator":6,"source":"le_ck_cubic"})");
}

TEST(Io, SearchReportTimingIsOptIn) {
  SearchOptions opt;
  opt.n = 3;
  opt.forbidden_len = 2;
  const ExtremalSearchReport r = search_extremal(opt);
  const Json plain = to_json(r);
  EXPECT_FALSE(plain.contains("elapsed_ms"));
  EXPECT_TRUE(to_json(r, true).contains("elapsed_ms"));
  EXPECT_EQ(plain["max_value"], 5);
  EXPECT_EQ(plain["searched_count"], 64);
  EXPECT_EQ(plain["objective"], "le");
  EXPECT_EQ(plain["scope"], "all");
  ASSERT_EQ(plain["witnesses"].size(), 1U);
  EXPECT_EQ(parse_arclist(plain["witnesses"][0]["arclist"].get<std::string>()).arc_count(), 3);
}

}  // namespace
}  // namespace dle
