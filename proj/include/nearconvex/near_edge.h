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

#include <cstddef>
#include <span>
#include <vector>

#include "nearconvex/catalan.h"
#include "nearconvex/geometry.h"

namespace nearconvex {

/**
 * A near-edge of weight n: points P_0, ..., P_n with strictly increasing x
 * and y_0 = y_n = 0. The polygon interior lies above (y > 0).
 */
class NearEdge {
 public:
  /// Throws std::invalid_argument unless the points form a near-edge.
  explicit NearEdge(std::vector<Point> points);

  /// Points (i, heights[i]) for i = 0..n.
  static NearEdge from_heights(std::span<const long> heights);

  std::size_t weight() const { return points_.size() - 1; }
  const std::vector<Point>& points() const { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }

  friend bool operator==(const NearEdge& a, const NearEdge& b) {
    return a.points_ == b.points_;
  }

 private:
  std::vector<Point> points_;
};

/// Strictly increasing point indices from 0 to the near-edge's weight.
class Roof {
 public:
  /// Throws std::invalid_argument unless the indices start at 0, strictly
  /// increase and have at least two entries.
  explicit Roof(std::vector<std::size_t> indices);

  const std::vector<std::size_t>& indices() const { return indices_; }
  std::size_t length() const { return indices_.size() - 1; }

  friend bool operator==(const Roof&, const Roof&) = default;

 private:
  std::vector<std::size_t> indices_;
};

/// E^eps: every y multiplied by eps. Throws std::invalid_argument if eps <= 0.
NearEdge scale_eps(const NearEdge& e, const Rational& eps);

/// Indices of the extremal vertices of the lower boundary, ascending;
/// always starts with 0 and ends with n.
std::vector<std::size_t> lower_extremals(const NearEdge& e);

/// Index sets of all sub-near-edges (increasing subsequences containing
/// every lower extremal), ordered by bitmask over the optional points.
std::vector<std::vector<std::size_t>> sub_near_edge_indices(const NearEdge& e);
std::vector<NearEdge> sub_near_edges(const NearEdge& e);

/// All roofs: partial roofs whose graph is on or above every point.
std::vector<Roof> roofs(const NearEdge& e);

/// Triangulations of the region sheltered by `r` that use exactly the
/// points of `e` inside it. Throws std::invalid_argument if `r` does not end
/// at e's last point.
BigInt tau_max_region(const NearEdge& e, const Roof& r);

/// p_E = sum over roofs R of tau_max_region(E, R) p_len(R).
IntPoly max_near_edge_poly(const NearEdge& e);

/// pbar_E = sum over sub-near-edges E' of p_E' s^weight(E').
BiPoly complete_near_edge_poly(const NearEdge& e);

/// Prime factors in order. Each factor is normalized to a near-edge by the
/// shear (x, y) -> (x - x_0, y - line(x)) through its two endpoints, which
/// keeps every orientation.
std::vector<NearEdge> factorize(const NearEdge& e);
bool is_prime(const NearEdge& e);

/// Builds a near-edge that factorizes as a . b: both factors are flattened
/// and sheared into a downward kink meeting at the split point.
NearEdge join(const NearEdge& a, const NearEdge& b);

/// Reflection in a vertical line, reversed and re-anchored so x starts at 0.
NearEdge vertical_mirror(const NearEdge& e);

/// No three points collinear.
bool is_generic(const NearEdge& e);

/// Weight-n near-edge with P_i = (i, signs[i-1] i (n - i)); signs are +1/-1
/// and n = signs.size() + 1. Throws std::invalid_argument on empty input or
/// a sign other than +1/-1.
NearEdge convex_near_edge(std::span<const int> signs);

/// Legendre symbol (x | p) via Euler's criterion; p an odd prime.
int legendre_symbol(unsigned long x, unsigned long p);
bool is_odd_prime(unsigned long p);

/// Convex near-edge of weight p built from ((x | p))_{x=1..p-1}, negated
/// when `negate`. Throws std::invalid_argument unless p is an odd prime.
NearEdge legendre_near_edge(unsigned long p, bool negate);

}  // namespace nearconvex
