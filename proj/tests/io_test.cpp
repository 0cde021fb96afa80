// Copyright 2026 The nearconvex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "nearconvex/catalan.h"
#include "nearconvex/io.h"

namespace nearconvex {
namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

TEST(ParseRational, Forms) {
  EXPECT_EQ(parse_rational("3"), 3);
  EXPECT_EQ(parse_rational("-7/14"), make_rational(-1, 2));
  EXPECT_EQ(parse_rational("0/5"), 0);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1.5"), ParseError);
  EXPECT_THROW(parse_rational("1/-2"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(ParsePoints, CommentsAndBlankLines) {
  std::istringstream in("# header\n0 0\n\n  1/2   -3 # trailing\n2 0\n");
  auto pts = parse_points(in);
  ASSERT_EQ(pts.size(), 3u);
  EXPECT_EQ(pts[1], (Point{make_rational(1, 2), make_rational(-3)}));
}

TEST(ParsePoints, ErrorsNameTheLine) {
  std::istringstream wrong_count("0 0\n1 2 3\n");
  EXPECT_NE(error_of([&] { parse_points(wrong_count); }).find("line 2"), std::string::npos);
  std::istringstream bad_token("0 0\n\n1 x\n");
  const std::string msg = error_of([&] { parse_points(bad_token); });
  EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
  EXPECT_NE(msg.find("'x'"), std::string::npos) << msg;
}

TEST(ParseWeights, Examples) {
  EXPECT_EQ(parse_weights("1,5,2,3,4"), (std::vector<unsigned>{1, 5, 2, 3, 4}));
  EXPECT_NE(error_of([] { parse_weights("1,,2"); }).find("''"), std::string::npos);
  EXPECT_NE(error_of([] { parse_weights("1,a2,2"); }).find("'a2'"), std::string::npos);
  EXPECT_NE(error_of([] { parse_weights("1,-2,2"); }).find("'-2'"), std::string::npos);
}

TEST(Json, Schema) {
  SPoly p = SPoly::monomial(4) + SPoly::monomial(3, 2);
  EXPECT_EQ(to_json(p).dump(),
            R"({"variable":"s","terms":[{"exp":4,"coeff":"1"},{"exp":3,"coeff":"2"}]})");
  EXPECT_EQ(to_json(complete_edge_poly(1)).dump(),
            R"({"variables":["s","t"],"terms":[{"s":1,"t":1,"coeff":"1"}]})");
  EXPECT_EQ(to_json(IntPoly::monomial(2, -3)).dump(),
            R"({"variable":"t","terms":[{"exp":2,"coeff":"-3"}]})");
}

TEST(Json, RoundTrip) {
  std::mt19937 rng(53);
  std::uniform_int_distribution<int> exp(0, 30), count(0, 6);
  for (int trial = 0; trial < 50; ++trial) {
    SPoly s;
    IntPoly t;
    BiPoly b;
    for (int i = count(rng); i > 0; --i) {
      BigInt big = catalan(static_cast<unsigned>(exp(rng)) * 3) * (i % 2 ? 1 : -1);
      s += SPoly::monomial(exp(rng), big);
      t += IntPoly::monomial(exp(rng), big);
      b += BiPoly::monomial(exp(rng), exp(rng), big);
    }
    EXPECT_EQ(spoly_from_json(nlohmann::ordered_json::parse(to_json(s).dump())), s);
    EXPECT_EQ(intpoly_from_json(nlohmann::ordered_json::parse(to_json(t).dump())), t);
    EXPECT_EQ(bipoly_from_json(nlohmann::ordered_json::parse(to_json(b).dump())), b);
  }
}

TEST(Json, RejectsMalformed) {
  using J = nlohmann::ordered_json;
  EXPECT_THROW(spoly_from_json(J::parse(R"({"variable":"t","terms":[]})")), ParseError);
  EXPECT_THROW(spoly_from_json(J::parse(R"({"variable":"s","terms":[{"exp":1,"coeff":3}]})")),
               ParseError);
  EXPECT_THROW(spoly_from_json(J::parse(R"({"variable":"s","terms":[{"exp":-1,"coeff":"3"}]})")),
               ParseError);
  EXPECT_THROW(bipoly_from_json(J::parse(R"({"variables":["t","s"],"terms":[]})")), ParseError);
}

}  // namespace
}  // namespace nearconvex
