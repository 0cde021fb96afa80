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

#include <string>
#include <vector>

#include "nearconvex/poly.h"

namespace nearconvex {

struct IdentityCheck {
  std::string name;
  bool pass;
  std::string detail;  // first failing case, empty on success
};

/**
 * Identity sweeps parameterized by a single bound B >= 1:
 *   tau_max(n, m, 1, 1) = binom(n + m, n) for 1 <= n, m <= B;
 *   tau_max(n + 1, m + 1, 1) = binom(n + m, n) for 1 <= n, m <= B;
 *   p_m = t (p_{m-1} - p_{m-2}) for 2 <= m <= 8B;
 *   f(k, n) = sum_l C_{k-l} f(l, n - 1) for k <= B - 2, 2 <= n <= B;
 *   the (k+1)-st forward difference of f(k, .) vanishes on [1, k+4]
 *   for k <= B - 3.
 * B = 8 gives the desk-scale ranges.
 */
std::vector<IdentityCheck> run_identity_checks(unsigned bound);

/// <t x y, t^2 G_C> mod p for the three products of the Legendre near-edges
/// E_p^+ and E_p^-, compared with (-1 | p).
struct LegendreCheck {
  unsigned long p;
  BigInt expected;                   // (-1 | p) reduced into [0, p)
  std::vector<BigInt> residues;      // ++, --, +-
  bool pass;
};

LegendreCheck legendre_check(unsigned long p);

}  // namespace nearconvex
