// Copyright 2026 The Authors.
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

#include "basemod/errors.hpp"
#include "basemod/io.hpp"
#include "basemod/rational.hpp"
#include "fixtures.hpp"

namespace basemod {
namespace {

using testing::all_subsets;
using testing::q;

TEST(RationalText, RoundTrip) {
  EXPECT_EQ(to_string(q(6, 14)), "3/7");
  EXPECT_EQ(to_string(q(4, 2)), "2");
  EXPECT_EQ(to_string(q(-1, 3)), "-1/3");
  EXPECT_EQ(parse_rational("3/7"), q(3, 7));
  EXPECT_EQ(parse_rational("-4/6"), q(-2, 3));
  EXPECT_EQ(parse_rational("5"), q(5));
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("x"), DomainError);
  EXPECT_THROW(parse_rational(""), DomainError);
}

TEST(ParseMatroid, GraphFormat) {
  const Matroid m = parse_matroid("# comment\n1 2 a\n2 3 b\n\n1 3 c\n3 4 d\n", InputFormat::kGraph);
  const Matroid t = testing::tp();
  ASSERT_EQ(m.size(), 4);
  EXPECT_EQ(m.labels(), t.labels());
  for (ElementSet x : all_subsets(4)) EXPECT_EQ(m.rank(x), t.rank(x));
}

TEST(ParseMatroid, ErrorsCarryLineNumbers) {
  try {
    parse_matroid("1 2 a\n2 3\n", InputFormat::kGraph);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  try {
    parse_matroid("labels a b\n1 2\n1 x\n", InputFormat::kLinear);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(ParseMatroid, LinearUniformBases) {
  const Matroid lin = parse_matroid("labels x y z\n1 0 1\n0 1 1/2\n", InputFormat::kLinear);
  EXPECT_EQ(lin.rank(), 2);
  EXPECT_EQ(lin.label(2), "z");
  const Matroid uni = parse_matroid("uniform 2 4\n", InputFormat::kUniform);
  EXPECT_EQ(uni.size(), 4);
  EXPECT_EQ(uni.rank(), 2);
  const Matroid bases = parse_matroid("a,b,d\na,c,d\nb,c,d\n", InputFormat::kBases);
  EXPECT_EQ(bases.rank(), 3);
  EXPECT_EQ(bases.size(), 4);
}

TEST(ParseMatroid, SemanticErrorsBecomeParseErrors) {
  EXPECT_THROW(parse_matroid("1 1 a\n", InputFormat::kGraph), ParseError);
  EXPECT_THROW(parse_matroid("a,b\nc,d\n", InputFormat::kBases), ParseError);
  EXPECT_THROW(parse_matroid("uniform 3 2\n", InputFormat::kUniform), ParseError);
}

TEST(ParseMatroid, WritersRoundTrip) {
  const std::vector<Edge> edges{{"1", "2", "a"}, {"2", "3", "b"}};
  const Matroid g = parse_matroid(write_graph(edges), InputFormat::kGraph);
  EXPECT_EQ(g.rank(), 2);
  const RationalMatrix a{{1, q(1, 2)}, {0, 3}};
  const Matroid l = parse_matroid(write_linear(a, {"p", "r"}), InputFormat::kLinear);
  EXPECT_EQ(l.labels(), (std::vector<std::string>{"p", "r"}));
  EXPECT_EQ(l.rank(), 2);
}

TEST(Formats, Names) {
  EXPECT_EQ(parse_format("bases"), InputFormat::kBases);
  EXPECT_EQ(format_name(InputFormat::kLinear), "linear");
  EXPECT_THROW(parse_format("edges"), ParseError);
}

TEST(Options, CapsAndExponents) {
  const Caps c = parse_caps("subsets=1048576,bases=1000000");
  EXPECT_EQ(c.subsets, 1048576u);
  EXPECT_EQ(c.bases, 1000000u);
  EXPECT_EQ(parse_caps("bases=5").subsets, Caps{}.subsets);
  EXPECT_THROW(parse_caps("subsets=-1"), DomainError);
  EXPECT_THROW(parse_caps("foo=3"), DomainError);
  const auto p = parse_p_list("2,3,3/2");
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p[2], q(3, 2));
  EXPECT_THROW(parse_p_list("1"), DomainError);
  EXPECT_THROW(parse_p_list(""), DomainError);
}

}  // namespace
}  // namespace basemod
