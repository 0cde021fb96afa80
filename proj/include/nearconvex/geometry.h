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

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace nearconvex {

/// Exact rational number, always kept in lowest terms.
using Rational = mpq_class;

/// num/den in lowest terms. Throws std::invalid_argument if den == 0.
Rational make_rational(long num, long den = 1);

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
};

Point make_point(long x, long y);
std::string to_string(const Point& p);

/// Sign of det(q - p, r - p): +1 counterclockwise, -1 clockwise, 0 collinear.
int orientation(const Point& p, const Point& q, const Point& r);

/// Lexicographic (x, then y) order.
bool lex_less(const Point& a, const Point& b);

/**
 * Precomputed combinatorial view of a small point set: every triple
 * orientation, plus the lexicographic and y ranks needed to decide
 * betweenness and ray crossings without touching coordinates again.
 */
class OrderType {
 public:
  explicit OrderType(std::span<const Point> points);

  std::size_t size() const { return n_; }
  int orient(std::size_t a, std::size_t b, std::size_t c) const {
    return table_[(a * n_ + b) * n_ + c];
  }

  // p lies on the segment (a, b) but is neither endpoint.
  bool on_open_segment(std::size_t p, std::size_t a, std::size_t b) const;
  // Closed segments [a, b] and [c, d] share at least one point.
  bool segments_touch(std::size_t a, std::size_t b, std::size_t c,
                      std::size_t d) const;
  // Open segments cross at a single interior point of both.
  bool proper_cross(std::size_t a, std::size_t b, std::size_t c,
                    std::size_t d) const;
  // p is in the closed triangle (a, b, c), given counterclockwise.
  bool in_closed_triangle(std::size_t p, std::size_t a, std::size_t b,
                          std::size_t c) const;
  // p is in the open interior of the simple counterclockwise polygon.
  template <typename Index>
  bool strictly_inside(std::size_t p, std::span<const Index> polygon) const;

 private:
  std::size_t n_;
  std::vector<std::int8_t> table_;
  std::vector<std::size_t> lex_rank_;
  std::vector<std::size_t> y_rank_;
};

template <typename Index>
bool OrderType::strictly_inside(std::size_t p,
                                std::span<const Index> polygon) const {
  const std::size_t k = polygon.size();
  int winding = 0;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t a = polygon[i];
    std::size_t b = polygon[(i + 1) % k];
    if (a == p || b == p || on_open_segment(p, a, b)) return false;
    if (y_rank_[a] <= y_rank_[p]) {
      if (y_rank_[b] > y_rank_[p] && orient(a, b, p) > 0) ++winding;
    } else if (y_rank_[b] <= y_rank_[p] && orient(a, b, p) < 0) {
      --winding;
    }
  }
  return winding != 0;
}

}  // namespace nearconvex
