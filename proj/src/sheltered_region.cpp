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

#include "sheltered_region.h"

#include <algorithm>

namespace nearconvex::detail {

BigInt FullTriangulationCounter::count(const std::vector<std::size_t>& boundary,
                                       const std::vector<std::size_t>& interior) {
  std::vector<std::size_t> key = boundary;
  key.push_back(static_cast<std::size_t>(-1));
  key.insert(key.end(), interior.begin(), interior.end());
  if (auto it = components_.find(key); it != components_.end()) return it->second;
  BigInt result = interior.empty() ? count_hollow(boundary) : count_filled(boundary, interior);
  components_.emplace(std::move(key), result);
  return result;
}

// Polygon without interior points: classic interval recursion over chords.
BigInt FullTriangulationCounter::count_hollow(const std::vector<std::size_t>& w) const {
  const std::size_t k = w.size();
  if (k < 3) return 1;

  auto in_cone = [&](std::size_t i, std::size_t j) {
    std::size_t a = w[i], b = w[j];
    std::size_t prev = w[(i + k - 1) % k], next = w[(i + 1) % k];
    if (ot_.orient(prev, a, next) >= 0)
      return ot_.orient(a, b, prev) > 0 && ot_.orient(b, a, next) > 0;
    return !(ot_.orient(a, b, next) >= 0 && ot_.orient(b, a, prev) >= 0);
  };
  auto diagonal = [&](std::size_t i, std::size_t j) {
    for (std::size_t m = 0; m < k; ++m) {
      if (m == i || m == j) continue;
      if (ot_.on_open_segment(w[m], w[i], w[j])) return false;
      std::size_t m2 = (m + 1) % k;
      if (m2 == i || m2 == j) continue;
      if (ot_.segments_touch(w[i], w[j], w[m], w[m2])) return false;
    }
    return in_cone(i, j) && in_cone(j, i);
  };

  std::vector<std::vector<char>> ok(k, std::vector<char>(k, 0));
  for (std::size_t i = 0; i + 1 < k; ++i) {
    ok[i][i + 1] = 1;
    for (std::size_t j = i + 2; j < k; ++j)
      ok[i][j] = (i == 0 && j == k - 1) ? 1 : diagonal(i, j);
  }

  std::vector<std::vector<BigInt>> t(k, std::vector<BigInt>(k, 0));
  for (std::size_t i = 0; i + 1 < k; ++i) t[i][i + 1] = 1;
  for (std::size_t len = 2; len < k; ++len)
    for (std::size_t i = 0; i + len < k; ++i) {
      std::size_t j = i + len;
      if (!ok[i][j]) continue;
      BigInt sum = 0;
      for (std::size_t m = i + 1; m < j; ++m)
        if (ok[i][m] && ok[m][j] && ot_.orient(w[i], w[m], w[j]) > 0)
          sum += t[i][m] * t[m][j];
      t[i][j] = std::move(sum);
    }
  return t[0][k - 1];
}

// Polygon with interior points: place the triangle on the edge from the
// smallest vertex, recurse into what is left. Every point must end up as a
// vertex, so no triangle may swallow one.
BigInt FullTriangulationCounter::count_filled(const std::vector<std::size_t>& boundary,
                                              const std::vector<std::size_t>& interior) {
  std::vector<std::size_t> poly = boundary;
  std::rotate(poly.begin(), std::min_element(poly.begin(), poly.end()), poly.end());
  if (auto it = regions_.find(poly); it != regions_.end()) return it->second;

  const std::size_t k = poly.size();
  std::span<const std::size_t> span(poly);
  std::vector<std::size_t> inside;
  for (std::size_t p : interior)
    if (ot_.strictly_inside(p, span)) inside.push_back(p);

  const std::size_t v0 = poly[0], v1 = poly[1];
  auto fits = [&](std::size_t q) {
    if (ot_.orient(v0, v1, q) <= 0) return false;
    for (std::size_t w : poly)
      if (w != v0 && w != v1 && w != q && ot_.in_closed_triangle(w, v0, v1, q)) return false;
    for (std::size_t p : inside)
      if (p != q && ot_.in_closed_triangle(p, v0, v1, q)) return false;
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t a = poly[i], b = poly[(i + 1) % k];
      if (ot_.proper_cross(a, b, v1, q) || ot_.proper_cross(a, b, q, v0)) return false;
    }
    return true;
  };

  BigInt total = 0;
  for (std::size_t j = 2; j < k; ++j) {
    if (!fits(poly[j])) continue;
    BigInt prod = 1;
    if (j >= 3)
      prod *= count_filled({poly.begin() + 1, poly.begin() + j + 1}, inside);
    if (prod != 0 && j + 2 <= k) {
      std::vector<std::size_t> rest(poly.begin() + j, poly.end());
      rest.push_back(v0);
      prod *= count_filled(rest, inside);
    }
    total += prod;
  }
  for (std::size_t q : inside) {
    if (!fits(q)) continue;
    std::vector<std::size_t> rest(poly.begin() + 1, poly.end());
    rest.push_back(v0);
    rest.push_back(q);
    total += count_filled(rest, inside);
  }
  regions_.emplace(std::move(poly), total);
  return total;
}

}  // namespace nearconvex::detail
