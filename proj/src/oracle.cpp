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

#include "nearconvex/oracle.h"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace nearconvex {

PointConfiguration::PointConfiguration(std::vector<Point> points)
    : points_(std::move(points)) {
  if (points_.size() < 3)
    throw std::invalid_argument("a configuration needs at least 3 points");
  if (points_.size() > 255)
    throw std::invalid_argument("configurations are limited to 255 points");
  for (std::size_t i = 0; i < points_.size(); ++i)
    for (std::size_t j = i + 1; j < points_.size(); ++j)
      if (points_[i] == points_[j])
        throw std::invalid_argument("duplicate point " + to_string(points_[i]));
  bool flat = true;
  for (std::size_t k = 2; k < points_.size() && flat; ++k)
    flat = orientation(points_[0], points_[1], points_[k]) == 0;
  if (flat) throw std::invalid_argument("all points are collinear");
}

std::vector<std::size_t> Triangulation::vertices() const {
  std::vector<std::size_t> v;
  for (const auto& t : triangles) v.insert(v.end(), t.begin(), t.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<std::size_t> convex_hull(const PointConfiguration& c) {
  const auto& pts = c.points();
  std::vector<std::size_t> order(pts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return lex_less(pts[a], pts[b]); });

  // Andrew's monotone chain; collinear points are popped.
  std::vector<std::size_t> hull(2 * order.size());
  std::size_t k = 0;
  for (std::size_t i : order) {
    while (k >= 2 && orientation(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= 0) --k;
    hull[k++] = i;
  }
  for (std::size_t t = k + 1, i = order.size() - 1; i-- > 0;) {
    while (k >= t && orientation(pts[hull[k - 2]], pts[hull[k - 1]], pts[order[i]]) <= 0)
      --k;
    hull[k++] = order[i];
  }
  hull.resize(k - 1);
  return hull;
}

namespace {

using Vertex = std::uint8_t;
using Polygon = std::vector<Vertex>;
using Counts = std::vector<unsigned __int128>;  // index: interior points used

// One way to place the triangle on the polygon's first edge.
struct Split {
  Vertex apex;
  bool interior;  // apex is a new vertex taken from inside the polygon
  std::vector<Polygon> parts;
};

Polygon canonical(Polygon p) {
  std::rotate(p.begin(), std::min_element(p.begin(), p.end()), p.end());
  return p;
}

// Splits a region along the triangle on its first edge (p[0], p[1]). Every
// triangulation of the region contains exactly one such triangle, and the
// rest of it triangulates the parts. Points strictly inside the triangle or
// on its two new sides end up inside no part, which leaves them unused.
class Decomposer {
 public:
  explicit Decomposer(const PointConfiguration& c)
      : ot_(c.points()), n_(c.size()) {}

  std::vector<Split> splits(const Polygon& poly) const {
    const std::size_t k = poly.size();
    const Vertex v0 = poly[0], v1 = poly[1];
    std::vector<Split> out;

    std::vector<bool> on_boundary(n_, false);
    for (Vertex v : poly) on_boundary[v] = true;

    auto fits = [&](std::size_t q) {
      if (ot_.orient(v0, v1, q) <= 0) return false;
      for (Vertex w : poly)
        if (w != v0 && w != v1 && w != q && ot_.in_closed_triangle(w, v0, v1, q))
          return false;
      for (std::size_t i = 0; i < k; ++i) {
        Vertex a = poly[i], b = poly[(i + 1) % k];
        if (ot_.proper_cross(a, b, v1, q) || ot_.proper_cross(a, b, q, v0)) return false;
      }
      return true;
    };

    for (std::size_t j = 2; j < k; ++j) {
      if (!fits(poly[j])) continue;
      Split s{poly[j], false, {}};
      if (j >= 3) s.parts.emplace_back(poly.begin() + 1, poly.begin() + j + 1);
      if (j + 2 <= k) {
        Polygon rest(poly.begin() + j, poly.end());
        rest.push_back(v0);
        s.parts.push_back(std::move(rest));
      }
      out.push_back(std::move(s));
    }

    std::span<const Vertex> span(poly);
    for (std::size_t q = 0; q < n_; ++q) {
      if (on_boundary[q] || !ot_.strictly_inside(q, span) || !fits(q)) continue;
      Polygon rest(poly.begin() + 1, poly.end());
      rest.push_back(v0);
      rest.push_back(static_cast<Vertex>(q));
      out.push_back({static_cast<Vertex>(q), true, {std::move(rest)}});
    }
    return out;
  }

  // Starting regions: the hull polygon with every subset of the points lying
  // inside hull edges promoted to vertices. Paired with the vertex count.
  std::vector<std::pair<Polygon, std::size_t>> roots(const PointConfiguration& c) const {
    auto hull = convex_hull(c);
    std::vector<std::vector<std::size_t>> on_edge(hull.size());
    std::size_t optional = 0;
    for (std::size_t i = 0; i < hull.size(); ++i) {
      std::size_t a = hull[i], b = hull[(i + 1) % hull.size()];
      for (std::size_t p = 0; p < n_; ++p)
        if (ot_.on_open_segment(p, a, b)) on_edge[i].push_back(p);
      const auto& pts = c.points();
      bool forward = lex_less(pts[a], pts[b]);
      std::sort(on_edge[i].begin(), on_edge[i].end(), [&](std::size_t u, std::size_t v) {
        return forward ? lex_less(pts[u], pts[v]) : lex_less(pts[v], pts[u]);
      });
      optional += on_edge[i].size();
    }
    if (optional > 24)
      throw std::invalid_argument("too many points inside hull edges");

    std::vector<std::pair<Polygon, std::size_t>> out;
    for (std::uint32_t mask = 0; mask < (1u << optional); ++mask) {
      Polygon poly;
      std::size_t bit = 0;
      for (std::size_t i = 0; i < hull.size(); ++i) {
        poly.push_back(static_cast<Vertex>(hull[i]));
        for (std::size_t p : on_edge[i])
          if (mask >> bit++ & 1u) poly.push_back(static_cast<Vertex>(p));
      }
      std::size_t used = poly.size();
      out.emplace_back(canonical(std::move(poly)), used);
    }
    return out;
  }

 private:
  OrderType ot_;
  std::size_t n_;
};

unsigned __int128 checked_add(unsigned __int128 a, unsigned __int128 b) {
  unsigned __int128 r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("triangulation count exceeds 128 bits");
  return r;
}

unsigned __int128 checked_mul(unsigned __int128 a, unsigned __int128 b) {
  unsigned __int128 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("triangulation count exceeds 128 bits");
  return r;
}

Counts convolve(const Counts& a, const Counts& b) {
  Counts r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = checked_add(r[i + j], checked_mul(a[i], b[j]));
  return r;
}

class Counter {
 public:
  explicit Counter(const Decomposer& d) : d_(d) {}

  Counts count(const Polygon& poly) {
    std::string key(poly.begin(), poly.end());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Counts total{0};
    for (const Split& s : d_.splits(poly)) {
      Counts prod{1};
      for (const Polygon& part : s.parts) prod = convolve(prod, count(canonical(part)));
      if (s.interior) prod.insert(prod.begin(), 0);
      if (total.size() < prod.size()) total.resize(prod.size(), 0);
      for (std::size_t i = 0; i < prod.size(); ++i) total[i] = checked_add(total[i], prod[i]);
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  const Decomposer& d_;
  std::unordered_map<std::string, Counts> memo_;
};

Triangle normalized(Triangle t) {
  std::rotate(t.begin(), std::min_element(t.begin(), t.end()), t.end());
  return t;
}

void enumerate_rec(const Decomposer& d, std::vector<Polygon>& pending,
                   std::vector<Triangle>& tris,
                   const std::function<void(const Triangulation&)>& visit) {
  if (pending.empty()) {
    Triangulation t{tris};
    for (auto& tri : t.triangles) tri = normalized(tri);
    std::sort(t.triangles.begin(), t.triangles.end());
    visit(t);
    return;
  }
  Polygon cur = std::move(pending.back());
  pending.pop_back();
  for (const Split& s : d.splits(cur)) {
    tris.push_back({cur[0], cur[1], s.apex});
    for (const Polygon& part : s.parts) pending.push_back(canonical(part));
    enumerate_rec(d, pending, tris, visit);
    pending.resize(pending.size() - s.parts.size());
    tris.pop_back();
  }
  pending.push_back(std::move(cur));
}

}  // namespace

void enumerate_triangulations(const PointConfiguration& c,
                              const std::function<void(const Triangulation&)>& visit) {
  Decomposer d(c);
  for (auto& [root, used] : d.roots(c)) {
    std::vector<Polygon> pending{root};
    std::vector<Triangle> tris;
    enumerate_rec(d, pending, tris, visit);
  }
}

SPoly triangulation_poly_bruteforce(const PointConfiguration& c) {
  Decomposer d(c);
  Counter counter(d);
  SPoly out;
  for (const auto& [root, used] : d.roots(c)) {
    Counts counts = counter.count(root);
    for (std::size_t i = 0; i < counts.size(); ++i)
      out.add_term(static_cast<unsigned>(used + i), from_u128(counts[i]));
  }
  return out;
}

BigInt tau_max_bruteforce(const PointConfiguration& c) {
  SPoly p = triangulation_poly_bruteforce(c);
  return p.coeff(static_cast<unsigned>(c.size()));
}

namespace {

Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// p on the segment (a, b) strictly between its endpoints.
bool strictly_between(const Point& p, const Point& a, const Point& b) {
  if (orientation(a, b, p) != 0 || p == a || p == b) return false;
  const Point& lo = lex_less(a, b) ? a : b;
  const Point& hi = lex_less(a, b) ? b : a;
  return lex_less(lo, p) && lex_less(p, hi);
}

}  // namespace

std::string validate_triangulation(const PointConfiguration& c,
                                   const Triangulation& t) {
  const auto& pts = c.points();
  const std::size_t n = pts.size();

  // Hull edges found by brute force: i -> j with nothing to the right and
  // every collinear point between i and j.
  Rational hull_area2 = 0;
  std::vector<bool> extremal(n, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      bool edge = true;
      for (std::size_t k = 0; k < n && edge; ++k) {
        if (k == i || k == j) continue;
        int o = orientation(pts[i], pts[j], pts[k]);
        edge = o > 0 || (o == 0 && strictly_between(pts[k], pts[i], pts[j]));
      }
      if (!edge) continue;
      hull_area2 += pts[i].x * pts[j].y - pts[j].x * pts[i].y;
      extremal[i] = extremal[j] = true;
    }

  Rational area2 = 0;
  for (const auto& tri : t.triangles) {
    Rational a = cross(pts[tri[0]], pts[tri[1]], pts[tri[2]]);
    if (a == 0) return "degenerate triangle";
    area2 += abs(a);
  }
  if (area2 != hull_area2) return "triangle areas do not add up to the hull area";

  auto ccw = [&](const Triangle& tri) {
    Triangle r = tri;
    if (orientation(pts[r[0]], pts[r[1]], pts[r[2]]) < 0) std::swap(r[1], r[2]);
    return r;
  };
  auto separated = [&](const Triangle& a, const Triangle& b) {
    for (int e = 0; e < 3; ++e) {
      const Point& p = pts[a[e]];
      const Point& q = pts[a[(e + 1) % 3]];
      bool all_out = true;
      for (std::size_t v : b) all_out = all_out && orientation(p, q, pts[v]) <= 0;
      if (all_out) return true;
    }
    return false;
  };
  for (std::size_t i = 0; i < t.triangles.size(); ++i)
    for (std::size_t j = i + 1; j < t.triangles.size(); ++j) {
      Triangle a = ccw(t.triangles[i]), b = ccw(t.triangles[j]);
      if (!separated(a, b) && !separated(b, a)) return "overlapping triangles";
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t v : a)
          for (int e = 0; e < 3; ++e)
            if (strictly_between(pts[v], pts[b[e]], pts[b[(e + 1) % 3]]))
              return "vertex inside another triangle's edge";
        std::swap(a, b);
      }
    }

  auto used = t.vertices();
  for (std::size_t i = 0; i < n; ++i)
    if (extremal[i] && !std::binary_search(used.begin(), used.end(), i))
      return "extremal point " + std::to_string(i) + " unused";
  return {};
}

}  // namespace nearconvex
