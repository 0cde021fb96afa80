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

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "nearconvex/geometry.h"
#include "nearconvex/poly.h"

namespace nearconvex {

/// A finite planar point set: at least three pairwise distinct points, not
/// all on one line. Throws std::invalid_argument otherwise.
class PointConfiguration {
 public:
  explicit PointConfiguration(std::vector<Point> points);

  std::size_t size() const { return points_.size(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }

 private:
  std::vector<Point> points_;
};

/// Vertex indices of one triangle, counterclockwise.
using Triangle = std::array<std::size_t, 3>;

/// A triangulation of conv(C): its triangles, sorted.
struct Triangulation {
  std::vector<Triangle> triangles;

  std::vector<std::size_t> vertices() const;  // sorted, distinct
};

/// Extremal points of C in counterclockwise order, starting from the
/// lexicographically smallest. Points inside hull edges are left out.
std::vector<std::size_t> convex_hull(const PointConfiguration& c);

/// Calls `visit` once for every triangulation of conv(C) with vertices in
/// C, maximal or not. Order is fixed by the recursion (hull subsets in
/// increasing bitmask order, then apex candidates in index order).
void enumerate_triangulations(const PointConfiguration& c,
                              const std::function<void(const Triangulation&)>& visit);

/// sum over triangulations of s^(number of points used), computed with a
/// memoized version of the same decomposition as enumerate_triangulations.
/// Throws std::overflow_error if an intermediate count exceeds 128 bits.
SPoly triangulation_poly_bruteforce(const PointConfiguration& c);

/// Leading coefficient of triangulation_poly_bruteforce.
BigInt tau_max_bruteforce(const PointConfiguration& c);

/// Checks a triangulation directly from coordinates: non-degenerate
/// triangles, doubled areas summing to the doubled hull area, pairwise
/// intersections that are empty or a shared vertex or a shared edge, and
/// every extremal point used. Returns an empty string when valid, else the
/// first violation found.
std::string validate_triangulation(const PointConfiguration& c,
                                   const Triangulation& t);

}  // namespace nearconvex
