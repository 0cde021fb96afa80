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

#include "nearconvex/geometry.h"

namespace nearconvex {
namespace {

TEST(Orientation, Examples) {
  EXPECT_EQ(orientation(make_point(0, 0), make_point(1, 0), make_point(2, 0)), 0);
  EXPECT_EQ(orientation(make_point(0, 0), make_point(1, 0), make_point(0, 1)), 1);
  EXPECT_EQ(orientation(make_point(0, 0), make_point(0, 1), make_point(1, 0)), -1);
}

TEST(Orientation, ExactOnNearlyCollinearRationals) {
  Point a{make_rational(1, 3), make_rational(1, 3)};
  Point b{make_rational(2, 3), make_rational(2, 3)};
  Point c{make_rational(1, 1000000007), make_rational(1, 1000000007)};
  EXPECT_EQ(orientation(a, b, c), 0);
  c.y += make_rational(1, 1000000009);
  EXPECT_EQ(orientation(a, b, c), 1);
}

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(make_rational(2, 4), make_rational(1, 2));
  EXPECT_EQ(make_rational(3, -6).get_str(), "-1/2");
  EXPECT_THROW(make_rational(1, 0), std::invalid_argument);
}

TEST(Point, Printing) {
  EXPECT_EQ(to_string(Point{make_rational(-1, 2), make_rational(3)}), "(-1/2, 3)");
}

TEST(OrderType, MatchesDirectOrientation) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> coord(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Point> pts;
    for (int i = 0; i < 7; ++i) pts.push_back(make_point(coord(rng), coord(rng)));
    OrderType ot(pts);
    for (std::size_t a = 0; a < pts.size(); ++a)
      for (std::size_t b = 0; b < pts.size(); ++b)
        for (std::size_t c = 0; c < pts.size(); ++c)
          if (a != b && b != c && a != c)
            ASSERT_EQ(ot.orient(a, b, c), orientation(pts[a], pts[b], pts[c]));
  }
}

TEST(OrderType, SegmentPredicates) {
  std::vector<Point> pts{make_point(0, 0), make_point(2, 0), make_point(1, 0), make_point(1, 1),
                         make_point(1, -1), make_point(3, 0)};
  OrderType ot(pts);
  EXPECT_TRUE(ot.on_open_segment(2, 0, 1));
  EXPECT_FALSE(ot.on_open_segment(5, 0, 1));
  EXPECT_TRUE(ot.proper_cross(0, 1, 3, 4));
  EXPECT_FALSE(ot.proper_cross(0, 2, 2, 3));  // shared endpoint only
  EXPECT_TRUE(ot.segments_touch(0, 1, 2, 3));
  EXPECT_TRUE(ot.segments_touch(0, 1, 1, 5));
  EXPECT_FALSE(ot.segments_touch(0, 2, 1, 5));
  EXPECT_TRUE(ot.in_closed_triangle(2, 0, 1, 3));
  EXPECT_FALSE(ot.in_closed_triangle(4, 0, 1, 3));
}

TEST(OrderType, StrictlyInsidePolygon) {
  std::vector<Point> pts{make_point(0, 0), make_point(4, 0), make_point(4, 4), make_point(0, 4),
                         make_point(2, 2), make_point(2, 0), make_point(5, 2), make_point(2, 3)};
  OrderType ot(pts);
  std::vector<std::size_t> square{0, 1, 2, 3};
  EXPECT_TRUE(ot.strictly_inside(4, std::span<const std::size_t>(square)));
  EXPECT_FALSE(ot.strictly_inside(5, std::span<const std::size_t>(square)));  // on an edge
  EXPECT_FALSE(ot.strictly_inside(6, std::span<const std::size_t>(square)));
  EXPECT_FALSE(ot.strictly_inside(0, std::span<const std::size_t>(square)));
  // Non-convex: the notch at (2, 2) puts (2, 3) outside.
  std::vector<std::size_t> notched{0, 1, 2, 4, 3};
  EXPECT_FALSE(ot.strictly_inside(7, std::span<const std::size_t>(notched)));
}

}  // namespace
}  // namespace nearconvex
