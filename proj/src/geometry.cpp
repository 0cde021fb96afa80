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

#include "nearconvex/geometry.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nearconvex {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Point make_point(long x, long y) { return {Rational(x), Rational(y)}; }

std::string to_string(const Point& p) {
  return "(" + p.x.get_str() + ", " + p.y.get_str() + ")";
}

int orientation(const Point& p, const Point& q, const Point& r) {
  Rational det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return sgn(det);
}

bool lex_less(const Point& a, const Point& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

OrderType::OrderType(std::span<const Point> points)
    : n_(points.size()), table_(n_ * n_ * n_, 0), lex_rank_(n_), y_rank_(n_) {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b)
      for (std::size_t c = b + 1; c < n_; ++c) {
        auto o = static_cast<std::int8_t>(orientation(points[a], points[b], points[c]));
        // Even permutations keep the sign, odd ones flip it.
        table_[(a * n_ + b) * n_ + c] = o;
        table_[(b * n_ + c) * n_ + a] = o;
        table_[(c * n_ + a) * n_ + b] = o;
        table_[(b * n_ + a) * n_ + c] = static_cast<std::int8_t>(-o);
        table_[(a * n_ + c) * n_ + b] = static_cast<std::int8_t>(-o);
        table_[(c * n_ + b) * n_ + a] = static_cast<std::int8_t>(-o);
      }

  std::vector<std::size_t> order(n_);
  std::iota(order.begin(), order.end(), 0);
  auto rank_by = [&](auto less, std::vector<std::size_t>& rank) {
    std::sort(order.begin(), order.end(), less);
    std::size_t r = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (i > 0 && less(order[i - 1], order[i])) ++r;
      rank[order[i]] = r;
    }
  };
  rank_by([&](std::size_t i, std::size_t j) { return lex_less(points[i], points[j]); },
          lex_rank_);
  rank_by([&](std::size_t i, std::size_t j) { return points[i].y < points[j].y; },
          y_rank_);
}

bool OrderType::on_open_segment(std::size_t p, std::size_t a,
                                std::size_t b) const {
  if (p == a || p == b || orient(a, b, p) != 0) return false;
  auto lo = std::min(lex_rank_[a], lex_rank_[b]);
  auto hi = std::max(lex_rank_[a], lex_rank_[b]);
  return lo < lex_rank_[p] && lex_rank_[p] < hi;
}

bool OrderType::segments_touch(std::size_t a, std::size_t b, std::size_t c,
                               std::size_t d) const {
  if (a == c || a == d || b == c || b == d) return true;
  if (proper_cross(a, b, c, d)) return true;
  return on_open_segment(c, a, b) || on_open_segment(d, a, b) ||
         on_open_segment(a, c, d) || on_open_segment(b, c, d);
}

bool OrderType::proper_cross(std::size_t a, std::size_t b, std::size_t c,
                             std::size_t d) const {
  return orient(a, b, c) * orient(a, b, d) < 0 &&
         orient(c, d, a) * orient(c, d, b) < 0;
}

bool OrderType::in_closed_triangle(std::size_t p, std::size_t a, std::size_t b,
                                   std::size_t c) const {
  return orient(a, b, p) >= 0 && orient(b, c, p) >= 0 && orient(c, a, p) >= 0;
}

}  // namespace nearconvex
