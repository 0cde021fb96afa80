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

#include "nearconvex/weakly_convex.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace nearconvex {

WeightSequence::WeightSequence(std::vector<unsigned> weights)
    : weights_(std::move(weights)) {
  if (weights_.size() < 3)
    throw std::invalid_argument("a weight sequence needs at least 3 edges");
  for (std::size_t i = 0; i < weights_.size(); ++i)
    if (weights_[i] == 0)
      throw std::invalid_argument("edge " + std::to_string(i + 1) + " has weight 0");
}

unsigned WeightSequence::total() const {
  return std::accumulate(weights_.begin(), weights_.end(), 0u);
}

bool operator==(const WeightSequence& a, const WeightSequence& b) {
  const auto& x = a.weights_;
  const auto& y = b.weights_;
  if (x.size() != y.size()) return false;
  for (std::size_t r = 0; r < x.size(); ++r) {
    bool same = true;
    for (std::size_t i = 0; i < x.size() && same; ++i) same = x[i] == y[(i + r) % y.size()];
    if (same) return true;
  }
  return false;
}

BigInt tau_max(const WeightSequence& w) {
  IntPoly prod = IntPoly::constant(1);
  for (unsigned a : w.weights()) prod *= max_edge_poly(a);
  return catalan_pairing(prod);
}

SPoly triangulation_poly(const WeightSequence& w) {
  BiPoly prod = BiPoly::monomial(0, 0);
  for (unsigned a : w.weights()) prod *= complete_edge_poly(a);
  return catalan_pairing(prod);
}

namespace {

// tau_max(1^ones, a_i, ..., a_l): the first i edges have already been broken
// into `ones` unit edges, which rotate to the front.
BigInt break_edges(const std::vector<unsigned>& a, std::size_t i, unsigned ones,
                   std::map<std::pair<std::size_t, unsigned>, BigInt>& memo) {
  if (i == a.size()) return catalan(ones - 2);
  if (a[i] == 1) return break_edges(a, i + 1, ones + 1, memo);
  auto key = std::make_pair(i, ones);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  BigInt sum = 0;
  for (unsigned k = 0; 2 * k <= a[i]; ++k) {
    BigInt term = binomial(a[i] - k, k) * break_edges(a, i + 1, ones + a[i] - k, memo);
    if (k % 2) sum -= term;
    else sum += term;
  }
  memo.emplace(key, sum);
  return sum;
}

}  // namespace

BigInt tau_max_inclusion_exclusion(const WeightSequence& w) {
  std::map<std::pair<std::size_t, unsigned>, BigInt> memo;
  return break_edges(w.weights(), 0, 0, memo);
}

std::vector<BigInt> a086452_prefix(std::size_t count) {
  std::vector<BigInt> out;
  for (std::size_t l = 3; out.size() < count; ++l)
    out.push_back(tau_max(WeightSequence(std::vector<unsigned>(l, 2))));
  return out;
}

FTable::FTable(unsigned k_max, unsigned n_max) : k_max_(k_max), n_max_(n_max) {
  if (n_max == 0) throw std::invalid_argument("n_max must be >= 1");
  values_.reserve(static_cast<std::size_t>(k_max + 1) * n_max);
  for (unsigned k = 0; k <= k_max; ++k)
    for (unsigned n = 1; n <= n_max; ++n) {
      std::vector<unsigned> w(2 + k, 1);
      w.push_back(n);
      values_.push_back(tau_max(WeightSequence(std::move(w))));
    }
}

std::vector<Point> base_polygon(std::size_t l) {
  static const std::vector<std::vector<std::pair<long, long>>> table = {
      {{0, 0}, {6, 0}, {3, 5}},
      {{0, 0}, {6, 0}, {6, 6}, {0, 6}},
      {{1, 0}, {5, 0}, {6, 4}, {3, 6}, {0, 4}},
      {{2, 0}, {6, 0}, {8, 3}, {6, 6}, {2, 6}, {0, 3}},
      {{2, 0}, {6, 0}, {8, 3}, {7, 6}, {4, 8}, {1, 6}, {0, 3}},
      {{2, 0}, {5, 0}, {7, 2}, {7, 5}, {5, 7}, {2, 7}, {0, 5}, {0, 2}},
  };
  if (l < 3) throw std::invalid_argument("a polygon needs at least 3 vertices");
  std::vector<Point> out;
  if (l - 3 < table.size()) {
    for (auto [x, y] : table[l - 3]) out.push_back(make_point(x, y));
  } else {
    for (long i = 0; i < static_cast<long>(l); ++i) out.push_back(make_point(i, i * i));
  }
  return out;
}

PointConfiguration standard_realization(const WeightSequence& w) {
  auto base = base_polygon(w.edges());
  std::vector<Point> pts;
  for (std::size_t i = 0; i < w.edges(); ++i) {
    const Point& a = base[i];
    const Point& b = base[(i + 1) % base.size()];
    unsigned m = w.weights()[i];
    for (unsigned k = 0; k < m; ++k) {
      Rational f(k, m);
      f.canonicalize();
      pts.push_back({a.x + f * (b.x - a.x), a.y + f * (b.y - a.y)});
    }
  }
  return PointConfiguration(std::move(pts));
}

}  // namespace nearconvex
