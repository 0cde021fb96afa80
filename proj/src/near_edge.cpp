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

#include "nearconvex/near_edge.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sheltered_region.h"

namespace nearconvex {

NearEdge::NearEdge(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.size() < 2)
    throw std::invalid_argument("a near-edge needs at least 2 points");
  for (std::size_t i = 1; i < points_.size(); ++i)
    if (!(points_[i - 1].x < points_[i].x))
      throw std::invalid_argument("x must strictly increase (point " + std::to_string(i) + ")");
  if (points_.front().y != 0 || points_.back().y != 0)
    throw std::invalid_argument("first and last points must have y = 0");
}

NearEdge NearEdge::from_heights(std::span<const long> heights) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < heights.size(); ++i)
    pts.push_back(make_point(static_cast<long>(i), heights[i]));
  return NearEdge(std::move(pts));
}

Roof::Roof(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  if (indices_.size() < 2 || indices_.front() != 0)
    throw std::invalid_argument("a roof starts at index 0 and has at least 2 vertices");
  for (std::size_t i = 1; i < indices_.size(); ++i)
    if (indices_[i] <= indices_[i - 1])
      throw std::invalid_argument("roof indices must strictly increase");
}

NearEdge scale_eps(const NearEdge& e, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  std::vector<Point> pts = e.points();
  for (auto& p : pts) p.y *= eps;
  return NearEdge(std::move(pts));
}

std::vector<std::size_t> lower_extremals(const NearEdge& e) {
  const auto& pts = e.points();
  std::vector<std::size_t> chain;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (chain.size() >= 2 &&
           orientation(pts[chain[chain.size() - 2]], pts[chain.back()], pts[i]) <= 0)
      chain.pop_back();
    chain.push_back(i);
  }
  return chain;
}

std::vector<std::vector<std::size_t>> sub_near_edge_indices(const NearEdge& e) {
  auto lower = lower_extremals(e);
  std::vector<std::size_t> optional;
  for (std::size_t i = 0; i <= e.weight(); ++i)
    if (!std::binary_search(lower.begin(), lower.end(), i)) optional.push_back(i);
  if (optional.size() > 30) throw std::invalid_argument("near-edge too large to enumerate");

  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << optional.size()); ++mask) {
    std::vector<std::size_t> idx = lower;
    for (std::size_t b = 0; b < optional.size(); ++b)
      if (mask >> b & 1) idx.push_back(optional[b]);
    std::sort(idx.begin(), idx.end());
    out.push_back(std::move(idx));
  }
  return out;
}

namespace {

NearEdge subsequence(const NearEdge& e, const std::vector<std::size_t>& idx) {
  std::vector<Point> pts;
  for (std::size_t i : idx) pts.push_back(e[i]);
  return NearEdge(std::move(pts));
}

// Everything about one near-edge that roof computations share.
class ShelterContext {
 public:
  explicit ShelterContext(const NearEdge& e)
      : e_(e), ot_(e.points()), lower_(lower_extremals(e)),
        on_lower_(e.weight() + 1, false), counter_(ot_) {
    for (std::size_t s = 0; s + 1 < lower_.size(); ++s)
      for (std::size_t i = lower_[s]; i <= lower_[s + 1]; ++i)
        on_lower_[i] = i == lower_[s] || i == lower_[s + 1] ||
                       ot_.orient(lower_[s], lower_[s + 1], i) == 0;
  }

  // Roof edge a -> b stays on or above every point in between.
  bool shelters(std::size_t a, std::size_t b) const {
    for (std::size_t i = a + 1; i < b; ++i)
      if (ot_.orient(a, b, i) > 0) return false;
    return true;
  }

  std::vector<Roof> roofs() const {
    const std::size_t n = e_.weight();
    std::vector<std::vector<char>> edge(n + 1, std::vector<char>(n + 1, 0));
    for (std::size_t a = 0; a <= n; ++a)
      for (std::size_t b = a + 1; b <= n; ++b) edge[a][b] = shelters(a, b);
    std::vector<Roof> out;
    std::vector<std::size_t> path{0};
    auto dfs = [&](auto&& self) -> void {
      std::size_t a = path.back();
      if (a == n) {
        out.emplace_back(path);
        return;
      }
      for (std::size_t b = a + 1; b <= n; ++b) {
        if (!edge[a][b]) continue;
        path.push_back(b);
        self(self);
        path.pop_back();
      }
    };
    dfs(dfs);
    return out;
  }

  BigInt tau(const Roof& r) {
    const auto& ri = r.indices();
    const std::size_t n = e_.weight();
    if (ri.back() != n)
      throw std::invalid_argument("roof does not end at the near-edge's last point");

    std::vector<char> on_roof(n + 1, 0), sheltered(n + 1, 0);
    for (std::size_t i : ri) on_roof[i] = sheltered[i] = 1;
    for (std::size_t s = 0; s + 1 < ri.size(); ++s)
      for (std::size_t i = ri[s] + 1; i < ri[s + 1]; ++i) {
        int o = ot_.orient(ri[s], ri[s + 1], i);
        // A point inside a roof edge would have to be a vertex of that edge.
        if (o == 0) return 0;
        sheltered[i] = o < 0;
      }

    BigInt total = 1;
    std::size_t from = 0;  // position in ri of the last roof vertex on the lower boundary
    for (std::size_t pos = 1; pos < ri.size(); ++pos) {
      if (!on_lower_[ri[pos]]) continue;
      std::size_t a = ri[from], b = ri[pos];
      bool lower_between = std::any_of(lower_.begin(), lower_.end(),
                                       [&](std::size_t l) { return a < l && l < b; });
      if (pos == from + 1 && !lower_between) {
        from = pos;  // roof runs along the lower boundary: no area
        continue;
      }
      std::vector<std::size_t> boundary, interior;
      for (std::size_t i = a; i <= b; ++i)
        if (sheltered[i] && on_lower_[i]) boundary.push_back(i);
      for (std::size_t p = pos - 1; p > from; --p) boundary.push_back(ri[p]);
      for (std::size_t i = a + 1; i < b; ++i)
        if (sheltered[i] && !on_lower_[i] && !on_roof[i]) interior.push_back(i);
      total *= counter_.count(boundary, interior);
      if (total == 0) return 0;
      from = pos;
    }
    return total;
  }

 private:
  const NearEdge& e_;
  OrderType ot_;
  std::vector<std::size_t> lower_;
  std::vector<bool> on_lower_;
  detail::FullTriangulationCounter counter_;
};

}  // namespace

std::vector<NearEdge> sub_near_edges(const NearEdge& e) {
  std::vector<NearEdge> out;
  for (const auto& idx : sub_near_edge_indices(e)) out.push_back(subsequence(e, idx));
  return out;
}

std::vector<Roof> roofs(const NearEdge& e) { return ShelterContext(e).roofs(); }

BigInt tau_max_region(const NearEdge& e, const Roof& r) { return ShelterContext(e).tau(r); }

IntPoly max_near_edge_poly(const NearEdge& e) {
  ShelterContext ctx(e);
  IntPoly p;
  for (const Roof& r : ctx.roofs()) {
    BigInt tau = ctx.tau(r);
    if (tau != 0) p += max_edge_poly(static_cast<unsigned>(r.length())) * tau;
  }
  return p;
}

BiPoly complete_near_edge_poly(const NearEdge& e) {
  BiPoly p;
  for (const auto& idx : sub_near_edge_indices(e)) {
    NearEdge sub = subsequence(e, idx);
    p += BiPoly::from_slice(static_cast<unsigned>(sub.weight()), max_near_edge_poly(sub));
  }
  return p;
}

namespace {

NearEdge normalized_factor(const NearEdge& e, std::size_t from, std::size_t to) {
  const Point& a = e[from];
  const Point& b = e[to];
  Rational slope = (b.y - a.y) / (b.x - a.x);
  std::vector<Point> pts;
  for (std::size_t i = from; i <= to; ++i) {
    const Point& p = e[i];
    pts.push_back({p.x - a.x, p.y - a.y - slope * (p.x - a.x)});
  }
  return NearEdge(std::move(pts));
}

// Points outside each side lie strictly above every line through two points
// of that side.
bool splits_at(const OrderType& ot, std::size_t n, std::size_t k) {
  auto side_ok = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t a = lo; a <= hi; ++a)
      for (std::size_t b = a + 1; b <= hi; ++b)
        for (std::size_t o = 0; o <= n; ++o)
          if ((o < lo || o > hi) && ot.orient(a, b, o) <= 0) return false;
    return true;
  };
  return side_ok(0, k) && side_ok(k, n);
}

void factor_into(const NearEdge& e, std::vector<NearEdge>& out) {
  OrderType ot(e.points());
  const std::size_t n = e.weight();
  for (std::size_t k : lower_extremals(e)) {
    if (k == 0 || k == n || !splits_at(ot, n, k)) continue;
    factor_into(normalized_factor(e, 0, k), out);
    factor_into(normalized_factor(e, k, n), out);
    return;
  }
  out.push_back(e);
}

}  // namespace

std::vector<NearEdge> factorize(const NearEdge& e) {
  std::vector<NearEdge> out;
  factor_into(e, out);
  return out;
}

bool is_prime(const NearEdge& e) { return factorize(e).size() == 1; }

NearEdge join(const NearEdge& a, const NearEdge& b) {
  Rational eps = 1;
  for (int attempt = 0; attempt < 64; ++attempt, eps /= 2) {
    NearEdge fa = normalized_factor(scale_eps(a, eps), 0, a.weight());
    NearEdge fb = normalized_factor(scale_eps(b, eps), 0, b.weight());
    const Rational wa = fa.points().back().x;
    const Rational wb = fb.points().back().x;
    std::vector<Point> pts;
    for (const Point& p : fa.points()) pts.push_back({p.x, p.y - p.x / wa});
    for (std::size_t i = 1; i < fb.points().size(); ++i) {
      const Point& p = fb[i];
      pts.push_back({wa + p.x, p.y - 1 + p.x / wb});
    }
    NearEdge joined(std::move(pts));
    OrderType ot(joined.points());
    if (splits_at(ot, joined.weight(), a.weight())) return joined;
  }
  throw std::runtime_error("join: no flattening produced a factorization");
}

NearEdge vertical_mirror(const NearEdge& e) {
  const Rational last = e.points().back().x;
  std::vector<Point> pts;
  for (auto it = e.points().rbegin(); it != e.points().rend(); ++it)
    pts.push_back({last - it->x, it->y});
  return NearEdge(std::move(pts));
}

bool is_generic(const NearEdge& e) {
  const auto& pts = e.points();
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      for (std::size_t c = b + 1; c < pts.size(); ++c)
        if (orientation(pts[a], pts[b], pts[c]) == 0) return false;
  return true;
}

NearEdge convex_near_edge(std::span<const int> signs) {
  if (signs.empty()) throw std::invalid_argument("convex_near_edge: empty sign list");
  const long n = static_cast<long>(signs.size()) + 1;
  std::vector<long> heights{0};
  for (long i = 1; i < n; ++i) {
    int s = signs[static_cast<std::size_t>(i - 1)];
    if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
    heights.push_back(s * i * (n - i));
  }
  heights.push_back(0);
  return NearEdge::from_heights(heights);
}

bool is_odd_prime(unsigned long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (unsigned long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

int legendre_symbol(unsigned long x, unsigned long p) {
  BigInt r;
  BigInt base = x % p;
  mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), (p - 1) / 2, BigInt(p).get_mpz_t());
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

NearEdge legendre_near_edge(unsigned long p, bool negate) {
  if (!is_odd_prime(p))
    throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
  std::vector<int> signs;
  for (unsigned long x = 1; x < p; ++x) signs.push_back((negate ? -1 : 1) * legendre_symbol(x, p));
  return convex_near_edge(signs);
}

}  // namespace nearconvex
