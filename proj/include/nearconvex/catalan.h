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

#include <stdexcept>
#include <string>

#include "nearconvex/poly.h"

namespace nearconvex {

/// Raised when the Catalan pairing meets a term of t-degree 0 or 1.
class PairingError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// C_k = binom(2k, k) / (k + 1). Values are cached in a shared,
/// mutex-guarded table that grows on demand.
BigInt catalan(unsigned k);

/// Maximal edge polynomial p_m = sum_k (-1)^k binom(m-k, k) t^(m-k).
/// m = 0 gives the constant 1, the anchor of p_m = t (p_{m-1} - p_{m-2}).
IntPoly max_edge_poly(unsigned m);

/// Complete edge polynomial sum_{k=1..m} binom(m-1, k-1) p_k(t) s^k.
/// Throws std::invalid_argument for m = 0.
BiPoly complete_edge_poly(unsigned m);

/// Umbral pairing <p(t), t^2 G_C(t)>: replaces t^k by C_{k-2}.
/// Throws PairingError if p has a nonzero term of degree 0 or 1.
BigInt catalan_pairing(const IntPoly& p);

/// Applies catalan_pairing to every s-slice of p.
SPoly catalan_pairing(const BiPoly& p);

}  // namespace nearconvex
