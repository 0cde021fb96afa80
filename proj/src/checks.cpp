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

#include "nearconvex/checks.h"

#include "nearconvex/catalan.h"
#include "nearconvex/near_edge.h"
#include "nearconvex/weakly_convex.h"

namespace nearconvex {

namespace {

std::string pair_text(unsigned a, unsigned b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

IdentityCheck binomial_identity(unsigned bound) {
  for (unsigned n = 1; n <= bound; ++n)
    for (unsigned m = 1; m <= bound; ++m)
      if (tau_max(WeightSequence({n, m, 1, 1})) != binomial(n + m, n))
        return {"tau_max(n,m,1,1) = binom(n+m,n)", false, "fails at " + pair_text(n, m)};
  return {"tau_max(n,m,1,1) = binom(n+m,n)", true, ""};
}

IdentityCheck shifted_identity(unsigned bound) {
  for (unsigned n = 1; n <= bound; ++n)
    for (unsigned m = 1; m <= bound; ++m)
      if (tau_max(WeightSequence({n + 1, m + 1, 1})) != binomial(n + m, n))
        return {"tau_max(n+1,m+1,1) = binom(n+m,n)", false, "fails at " + pair_text(n, m)};
  return {"tau_max(n+1,m+1,1) = binom(n+m,n)", true, ""};
}

IdentityCheck edge_poly_recurrence(unsigned bound) {
  const IntPoly t = IntPoly::monomial(1);
  for (unsigned m = 2; m <= 8 * bound; ++m)
    if (max_edge_poly(m) != t * (max_edge_poly(m - 1) - max_edge_poly(m - 2)))
      return {"p_m = t (p_{m-1} - p_{m-2})", false, "fails at m = " + std::to_string(m)};
  return {"p_m = t (p_{m-1} - p_{m-2})", true, ""};
}

IdentityCheck f_recurrence(const FTable& f) {
  const char* name = "f(k,n) = sum_l C_{k-l} f(l,n-1)";
  for (unsigned k = 0; k <= f.k_max(); ++k)
    for (unsigned n = 2; n <= f.n_max(); ++n) {
      BigInt sum = 0;
      for (unsigned l = 0; l <= k; ++l) sum += catalan(k - l) * f.at(l, n - 1);
      if (sum != f.at(k, n)) return {name, false, "fails at " + pair_text(k, n)};
    }
  return {name, true, ""};
}

IdentityCheck finite_difference(unsigned k_max) {
  const char* name = "(k+1)-st difference of f(k,.) vanishes";
  if (k_max == 0) return {name, true, ""};
  FTable f(k_max - 1, k_max + 3);
  for (unsigned k = 0; k < k_max; ++k) {
    std::vector<BigInt> row;
    for (unsigned n = 1; n <= k + 4; ++n) row.push_back(f.at(k, n));
    for (unsigned order = 0; order <= k; ++order) {
      for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
      row.pop_back();
    }
    for (const BigInt& d : row)
      if (d != 0) return {name, false, "fails for k = " + std::to_string(k)};
  }
  return {name, true, ""};
}

}  // namespace

std::vector<IdentityCheck> run_identity_checks(unsigned bound) {
  std::vector<IdentityCheck> out{binomial_identity(bound), shifted_identity(bound),
                                 edge_poly_recurrence(bound)};
  if (bound >= 2) out.push_back(f_recurrence(FTable(bound - 2, bound)));
  out.push_back(finite_difference(bound >= 3 ? bound - 2 : 0));
  return out;
}

LegendreCheck legendre_check(unsigned long p) {
  const IntPoly plus = max_near_edge_poly(legendre_near_edge(p, false));
  const IntPoly minus = max_near_edge_poly(legendre_near_edge(p, true));
  const IntPoly t = IntPoly::monomial(1);
  const BigInt modulus = p;
  auto reduce = [&](const BigInt& v) {
    BigInt r = v % modulus;
    if (r < 0) r += modulus;
    return r;
  };
  LegendreCheck c{p, reduce(p % 4 == 1 ? 1 : -1), {}, true};
  for (const IntPoly* e : {&plus, &minus})
    c.residues.push_back(reduce(catalan_pairing(t * *e * *e)));
  c.residues.push_back(reduce(catalan_pairing(t * plus * minus)));
  for (const BigInt& r : c.residues) c.pass = c.pass && r == c.expected;
  return c;
}

}  // namespace nearconvex
