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

#include "nearconvex/nearly_convex.h"

#include <optional>
#include <string>

#include "nearconvex/weakly_convex.h"

namespace nearconvex {

NearlyConvexPolygon::NearlyConvexPolygon(std::vector<NearEdge> edges)
    : edges_(std::move(edges)) {
  if (edges_.size() < 3)
    throw std::invalid_argument("a nearly convex polygon needs at least 3 near-edges");
}

BigInt tau_max(const NearlyConvexPolygon& p) {
  IntPoly product = IntPoly::constant(1);
  for (const NearEdge& e : p.edges()) product *= max_near_edge_poly(e);
  return catalan_pairing(product);
}

SPoly triangulation_poly(const NearlyConvexPolygon& p) {
  BiPoly product = BiPoly::monomial(0, 0, 1);
  for (const NearEdge& e : p.edges()) product = product * complete_near_edge_poly(e);
  return catalan_pairing(product);
}

namespace {

// Glued points are affine in eps: base + eps * drift.
struct GluedPoints {
  std::vector<Point> base;
  std::vector<Point> drift;
};

GluedPoints glue(const NearlyConvexPolygon& p) {
  const auto& edges = p.edges();
  const std::vector<Point> corners = base_polygon(edges.size());
  GluedPoints g;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Point& from = corners[i];
    const Point& to = corners[(i + 1) % corners.size()];
    const Point u{to.x - from.x, to.y - from.y};
    const NearEdge& e = edges[i];
    const Rational& x0 = e.points().front().x;
    const Rational span = e.points().back().x - x0;
    // The last point is the next edge's first.
    for (std::size_t k = 0; k + 1 < e.points().size(); ++k) {
      const Rational t = (e[k].x - x0) / span;
      const Rational h = e[k].y / span;
      g.base.push_back({from.x + t * u.x, from.y + t * u.y});
      g.drift.push_back({-h * u.y, h * u.x});
    }
  }
  return g;
}

Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
Point minus(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }

// c0 + c1 e + c2 e^2 keeps the sign of its lowest nonzero coefficient on
// (0, eps].
bool sign_constant(const Rational& c0, const Rational& c1, const Rational& c2,
                   const Rational& eps) {
  if (c0 == 0 && c1 == 0) return true;
  const int limit = c0 != 0 ? sgn(c0) : sgn(c1);
  auto value = [&](const Rational& e) -> Rational { return c0 + e * (c1 + e * c2); };
  if (sgn(value(eps)) != limit) return false;
  if (c2 == 0) return true;  // linear: no sign change between 0+ and eps
  const Rational vertex = -c1 / (2 * c2);
  return !(vertex > 0 && vertex < eps && sgn(value(vertex)) != limit);
}

}  // namespace

bool order_type_settled(const NearlyConvexPolygon& p, const Rational& eps) {
  const GluedPoints g = glue(p);
  const std::size_t n = g.base.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const Point ab = minus(g.base[b], g.base[a]);
      const Point db = minus(g.drift[b], g.drift[a]);
      for (std::size_t c = b + 1; c < n; ++c) {
        const Point ac = minus(g.base[c], g.base[a]);
        const Point dc = minus(g.drift[c], g.drift[a]);
        if (!sign_constant(cross(ab, ac), cross(ab, dc) + cross(db, ac), cross(db, dc), eps))
          return false;
      }
    }
  return true;
}

PointConfiguration realize(const NearlyConvexPolygon& p, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  const GluedPoints g = glue(p);
  std::vector<Point> out;
  for (std::size_t i = 0; i < g.base.size(); ++i)
    out.push_back({g.base[i].x + eps * g.drift[i].x, g.base[i].y + eps * g.drift[i].y});
  return PointConfiguration(std::move(out));
}

StabilizedPoly stabilized_oracle_poly(const NearlyConvexPolygon& p, unsigned max_halvings) {
  Rational eps = make_rational(1, 4);
  std::optional<SPoly> previous;
  for (unsigned i = 0; i <= max_halvings; ++i, eps /= 2) {
    if (!previous && !order_type_settled(p, eps)) continue;
    SPoly current = triangulation_poly_bruteforce(realize(p, eps));
    if (previous && current == *previous) return {std::move(current), eps};
    previous = std::move(current);
  }
  throw InconclusiveError("inconclusive: oracle polynomial did not stabilize after " +
                          std::to_string(max_halvings) + " halvings of eps");
}

}  // namespace nearconvex
