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
#include "nearconvex/oracle.h"

namespace nearconvex {

/**
 * Edge weights a_1, ..., a_l of a weakly convex polygon, read cyclically in
 * counterclockwise order. Requires l >= 3 and every a_i >= 1; throws
 * std::invalid_argument otherwise.
 *
 * Two sequences compare equal when one is a rotation of the other.
 */
class WeightSequence {
 public:
  explicit WeightSequence(std::vector<unsigned> weights);

  const std::vector<unsigned>& weights() const { return weights_; }
  std::size_t edges() const { return weights_.size(); }
  unsigned total() const;

  friend bool operator==(const WeightSequence& a, const WeightSequence& b);

 private:
  std::vector<unsigned> weights_;
};

/// Maximal triangulations: <prod p_{a_i}, t^2 G_C>.
BigInt tau_max(const WeightSequence& w);

/// Triangulation polynomial: <prod pbar_{a_i}, t^2 G_C> slice by slice.
SPoly triangulation_poly(const WeightSequence& w);

/// Maximal triangulations by repeatedly replacing an edge of weight a by
/// 1^(a-k) with signed coefficient (-1)^k binom(a-k, k), left to right,
/// until only unit edges remain and Catalan numbers apply. Does not use
/// edge polynomials.
BigInt tau_max_inclusion_exclusion(const WeightSequence& w);

/// tau_max(2,2,2), tau_max(2,2,2,2), ... (`count` terms).
std::vector<BigInt> a086452_prefix(std::size_t count);

/// f(k, n) = tau_max(1^(2+k), n) for 0 <= k <= k_max, 1 <= n <= n_max.
class FTable {
 public:
  FTable(unsigned k_max, unsigned n_max);

  unsigned k_max() const { return k_max_; }
  unsigned n_max() const { return n_max_; }
  const BigInt& at(unsigned k, unsigned n) const { return values_[k * n_max_ + (n - 1)]; }

 private:
  unsigned k_max_;
  unsigned n_max_;
  std::vector<BigInt> values_;
};

/// Exact realization of P(a_1, ..., a_l): a strictly convex base polygon
/// (see base_polygon) with edge i cut into a_i equal pieces.
PointConfiguration standard_realization(const WeightSequence& w);

/// Strictly convex counterclockwise l-gon with small integer coordinates,
/// l >= 3: a fixed lattice polygon for l <= 8, points (i, i^2) beyond.
std::vector<Point> base_polygon(std::size_t l);

}  // namespace nearconvex
