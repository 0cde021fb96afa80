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
#include <stdexcept>
#include <vector>

#include "nearconvex/near_edge.h"
#include "nearconvex/oracle.h"

namespace nearconvex {

/// Near-edges E_1, ..., E_l (l >= 3) glued in counterclockwise order onto a
/// strictly convex polygon. Throws std::invalid_argument if l < 3.
class NearlyConvexPolygon {
 public:
  explicit NearlyConvexPolygon(std::vector<NearEdge> edges);

  const std::vector<NearEdge>& edges() const { return edges_; }

 private:
  std::vector<NearEdge> edges_;
};

/// Raised when the oracle polynomial does not settle as eps shrinks.
class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// <prod p_{E_i}, t^2 G_C>.
BigInt tau_max(const NearlyConvexPolygon& p);

/// <prod pbar_{E_i}, t^2 G_C>, one s-slice at a time.
SPoly triangulation_poly(const NearlyConvexPolygon& p);

/// Glues E_i^eps onto base_polygon(l): edge i is mapped by the orientation
/// preserving similarity taking its endpoints to V_i and V_{i+1}. Throws
/// std::invalid_argument if eps <= 0 or two glued points coincide.
PointConfiguration realize(const NearlyConvexPolygon& p, const Rational& eps);

/// True when no triple of realize(p, e) changes orientation for 0 < e <= eps.
/// Each orientation is a quadratic in e, so this is decided exactly. Past
/// such an eps the order type, and with it every count, has its limit value.
bool order_type_settled(const NearlyConvexPolygon& p, const Rational& eps);

struct StabilizedPoly {
  SPoly poly;
  Rational eps;  // the smaller of the two eps values that agreed
};

/// Oracle polynomial of realize(p, eps) for eps = 1/4, 1/8, ... until two
/// consecutive values agree at an eps where order_type_settled holds.
/// Throws InconclusiveError if that needs more than `max_halvings` halvings.
StabilizedPoly stabilized_oracle_poly(const NearlyConvexPolygon& p,
                                      unsigned max_halvings = 12);

}  // namespace nearconvex
