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

#include <gtest/gtest.h>

#include <random>

#include "catalog.h"
#include "nearconvex/near_edge.h"
#include "nearconvex/oracle.h"

namespace nearconvex {
namespace {

using namespace nearconvex::testing;

// Same number of points and identical orientation of every triple.
bool same_order_type(const NearEdge& a, const NearEdge& b) {
  if (a.weight() != b.weight()) return false;
  const std::size_t n = a.points().size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (orientation(a[i], a[j], a[k]) != orientation(b[i], b[j], b[k])) return false;
  return true;
}

NearEdge random_near_edge(std::mt19937& rng, std::size_t weight) {
  std::uniform_int_distribution<long> h(-3, 3);
  std::vector<long> heights{0};
  for (std::size_t i = 1; i < weight; ++i) heights.push_back(h(rng));
  heights.push_back(0);
  return NearEdge::from_heights(heights);
}

std::vector<std::vector<std::size_t>> roof_indices(const NearEdge& e) {
  std::vector<std::vector<std::size_t>> out;
  for (const Roof& r : roofs(e)) out.push_back(r.indices());
  return out;
}

TEST(NearEdge, Validation) {
  EXPECT_THROW(NearEdge({make_point(0, 0)}), std::invalid_argument);
  EXPECT_THROW(NearEdge({make_point(0, 0), make_point(0, 1), make_point(1, 0)}),
               std::invalid_argument);
  EXPECT_THROW(NearEdge({make_point(0, 1), make_point(1, 0)}), std::invalid_argument);
  EXPECT_THROW(NearEdge({make_point(0, 0), make_point(1, 1)}), std::invalid_argument);
  EXPECT_EQ(ea().weight(), 5u);
}

TEST(Roof, Validation) {
  EXPECT_THROW(Roof({0}), std::invalid_argument);
  EXPECT_THROW(Roof({1, 2}), std::invalid_argument);
  EXPECT_THROW(Roof({0, 2, 2}), std::invalid_argument);
  EXPECT_EQ(Roof({0, 2, 5}).length(), 2u);
}

TEST(ScaleEps, Examples) {
  EXPECT_EQ(scale_eps(e1(), make_rational(1, 2)), e1());
  EXPECT_EQ(scale_eps(ea(), 1), ea());
  EXPECT_THROW(scale_eps(ea(), 0), std::invalid_argument);
  EXPECT_THROW(scale_eps(ea(), -1), std::invalid_argument);
  EXPECT_TRUE(same_order_type(scale_eps(ea(), make_rational(1, 7)), ea()));
}

TEST(LowerExtremals, Examples) {
  NearEdge eight = heights({0, -1, 1, 1, -2, -3, -2, -1, 0});
  EXPECT_EQ(lower_extremals(eight), (std::vector<std::size_t>{0, 1, 5, 8}));
  EXPECT_EQ(lower_extremals(e1()), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(lower_extremals(e23()), (std::vector<std::size_t>{0, 2}));
}

TEST(SubNearEdges, Counts) {
  EXPECT_EQ(sub_near_edges(heights({0, -1, 1, 1, -2, -3, -2, -1, 0})).size(), 32u);
  EXPECT_EQ(sub_near_edges(ea()).size(), 4u);
  EXPECT_EQ(sub_near_edges(e1()).size(), 1u);
  for (const NearEdge& sub : sub_near_edges(ea()))
    EXPECT_EQ(lower_extremals(sub).size(), lower_extremals(ea()).size());
}

TEST(Roofs, Examples) {
  using Idx = std::vector<std::vector<std::size_t>>;
  EXPECT_EQ(roof_indices(e1()), (Idx{{0, 1}}));
  EXPECT_EQ(roof_indices(e22()), (Idx{{0, 1, 2}, {0, 2}}));
  EXPECT_EQ(roof_indices(e21()), (Idx{{0, 1, 2}}));
}

// Every point sits between the lower chain and the roof (weakly).
TEST(Roofs, Dominance) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    NearEdge e = random_near_edge(rng, 2 + trial % 5);
    const auto lower = lower_extremals(e);
    for (const Roof& r : roofs(e)) {
      const auto& ri = r.indices();
      for (std::size_t i = 0; i <= e.weight(); ++i) {
        for (std::size_t s = 0; s + 1 < ri.size(); ++s)
          if (ri[s] <= i && i <= ri[s + 1])
            EXPECT_LE(orientation(e[ri[s]], e[ri[s + 1]], e[i]), 0);
        for (std::size_t s = 0; s + 1 < lower.size(); ++s)
          if (lower[s] <= i && i <= lower[s + 1])
            EXPECT_GE(orientation(e[lower[s]], e[lower[s + 1]], e[i]), 0);
      }
    }
  }
}

TEST(TauMaxRegion, Examples) {
  EXPECT_EQ(tau_max_region(e1(), Roof({0, 1})), 1);
  EXPECT_EQ(tau_max_region(e22(), Roof({0, 2})), 1);
  EXPECT_EQ(tau_max_region(ea(), Roof({0, 1, 2, 3, 4, 5})), 1);
  EXPECT_THROW(tau_max_region(ea(), Roof({0, 1, 3})), std::invalid_argument);
  // A point inside the open roof edge cannot be a vertex.
  EXPECT_EQ(tau_max_region(e23(), Roof({0, 2})), 0);
}

// The top slice of E_a: 14 p_3 + 7 p_4 + p_5, summed over its roofs.
TEST(TauMaxRegion, RowsOfEa) {
  BigInt by_length[6] = {0, 0, 0, 0, 0, 0};
  for (const Roof& r : roofs(ea())) by_length[r.length()] += tau_max_region(ea(), r);
  EXPECT_EQ(by_length[3], 14);
  EXPECT_EQ(by_length[4], 7);
  EXPECT_EQ(by_length[5], 1);
  EXPECT_EQ(by_length[1] + by_length[2], 0);
}

TEST(MaxNearEdgePoly, Examples) {
  EXPECT_EQ(max_near_edge_poly(e1()), IntPoly::monomial(1));
  EXPECT_EQ(max_near_edge_poly(e22()), p(2) + p(1));
  EXPECT_EQ(max_near_edge_poly(ea()), p(3) * 14 + p(4) * 7 + p(5));
}

TEST(CompleteNearEdgePoly, Examples) {
  EXPECT_EQ(complete_near_edge_poly(ea()),
            slice(5, p(3) * 14 + p(4) * 7 + p(5)) + slice(4, p(2) * 10 + p(3) * 7 + p(4) * 2) +
                slice(3, p(1) * 2 + p(2) * 2 + p(3)));
  EXPECT_EQ(complete_near_edge_poly(eb()), slice(4, p(3) * 5 + p(4)) +
                                               slice(3, (p(2) * 2 + p(3)) * 2) +
                                               slice(2, p(1) + p(2)));
  EXPECT_EQ(complete_near_edge_poly(ec()),
            slice(5, p(3) * 10 + p(4) * 7 + p(5) * 2) +
                slice(4, p(2) * 3 + p(3) * 13 + p(4) * 4) + slice(3, (p(2) * 2 + p(3)) * 3) +
                slice(2, p(1) + p(2)));
  EXPECT_EQ(complete_near_edge_poly(e3(2)), slice(3, p(3) * 2) + slice(2, p(2) * 2) + slice(1, p(1)));
  EXPECT_EQ(complete_near_edge_poly(e3(17)), complete_edge_poly(3));
}

TEST(Catalog, SmallNearEdges) {
  EXPECT_EQ(complete_near_edge_poly(e1()), slice(1, p(1)));
  EXPECT_EQ(complete_near_edge_poly(e21()), slice(2, p(2)) + slice(1, p(1)));
  EXPECT_EQ(complete_near_edge_poly(e22()), slice(2, p(2) + p(1)));
  EXPECT_EQ(complete_near_edge_poly(e22()), complete_near_edge_poly(e1()) * complete_near_edge_poly(e1()));
  EXPECT_EQ(complete_near_edge_poly(e23()), complete_near_edge_poly(e21()));
}

TEST(Catalog, PrimeWeightThree) {
  EXPECT_EQ(complete_near_edge_poly(e3(1)), reference_e31());
  EXPECT_EQ(complete_near_edge_poly(e3(3)), reference_e31());
  EXPECT_EQ(complete_near_edge_poly(e3(2)), reference_e32());
  EXPECT_EQ(complete_near_edge_poly(e3(4)), reference_e34());
  EXPECT_EQ(complete_near_edge_poly(e3(5)), reference_e34());
  EXPECT_EQ(complete_near_edge_poly(e3(9)), reference_e39());
  EXPECT_EQ(complete_near_edge_poly(e3(15)), reference_e39());
  EXPECT_EQ(complete_near_edge_poly(e3(11)), reference_e311());
  EXPECT_EQ(complete_near_edge_poly(e3(13)), reference_e311());
  EXPECT_EQ(complete_near_edge_poly(e3(17)), reference_e317());
}

// The reference entry for E_{3,12} and E_{3,14} disagrees with the sum over
// sub-near-edges in its s^2 slice only; the oracle suite settles which one
// holds (see nearly_convex_test).
TEST(Catalog, E312AndE314) {
  EXPECT_EQ(complete_near_edge_poly(e3(12)), corrected_e312());
  EXPECT_EQ(complete_near_edge_poly(e3(14)), corrected_e312());
  EXPECT_EQ(complete_near_edge_poly(e3(12)).slice(3), reference_e312().slice(3));
  EXPECT_NE(complete_near_edge_poly(e3(12)).slice(2), reference_e312().slice(2));
  // The only weight-2 sub-near-edge is isotopic to E_{2,2}.
  auto subs = sub_near_edges(e3(12));
  ASSERT_EQ(subs.size(), 2u);
  EXPECT_TRUE(same_order_type(subs[0], e22()));
}

TEST(Catalog, FactorizedWeightThree) {
  auto product = [](std::initializer_list<NearEdge> factors) {
    BiPoly q = BiPoly::monomial(0, 0);
    for (const auto& f : factors) q *= complete_near_edge_poly(f);
    return q;
  };
  EXPECT_EQ(complete_near_edge_poly(e3(6)), product({e1(), e21()}));
  EXPECT_EQ(complete_near_edge_poly(e3(7)), product({e1(), e1(), e1()}));
  EXPECT_EQ(complete_near_edge_poly(e3(8)), product({e21(), e1()}));
  EXPECT_EQ(complete_near_edge_poly(e3(10)), product({e23(), e1()}));
  EXPECT_EQ(complete_near_edge_poly(e3(16)), product({e1(), e23()}));
}

void expect_factors(const NearEdge& e, std::initializer_list<NearEdge> expected) {
  auto factors = factorize(e);
  ASSERT_EQ(factors.size(), expected.size());
  std::size_t i = 0;
  for (const NearEdge& f : expected) EXPECT_TRUE(same_order_type(factors[i++], f)) << i;
}

TEST(Factorize, Catalog) {
  expect_factors(e3(7), {e1(), e1(), e1()});
  expect_factors(e3(6), {e1(), e21()});
  expect_factors(e3(8), {e21(), e1()});
  expect_factors(e3(10), {e23(), e1()});
  expect_factors(e3(16), {e1(), e23()});
  expect_factors(e22(), {e1(), e1()});
  EXPECT_TRUE(is_prime(e21()));
  EXPECT_TRUE(is_prime(e1()));
  EXPECT_FALSE(is_prime(e22()));
  for (int j : {1, 2, 3, 4, 5, 9, 11, 12, 13, 14, 15, 17}) EXPECT_TRUE(is_prime(e3(j))) << j;
}

TEST(Factorize, UniqueFactorization) {
  std::mt19937 rng(17);
  auto check = [](const NearEdge& e) {
    auto factors = factorize(e);
    BiPoly product = BiPoly::monomial(0, 0);
    std::size_t weight = 0;
    for (const auto& f : factors) {
      EXPECT_TRUE(is_prime(f));
      product *= complete_near_edge_poly(f);
      weight += f.weight();
    }
    EXPECT_EQ(weight, e.weight());
    EXPECT_EQ(product, complete_near_edge_poly(e));
  };
  for (const auto& entry : catalog()) check(entry.edge);
  for (int trial = 0; trial < 40; ++trial) check(random_near_edge(rng, 2 + trial % 5));
}

// join builds a genuine product; both polynomials multiply.
TEST(Factorize, Multiplicativity) {
  const auto all = catalog();
  for (const auto& a : all)
    for (const auto& b : all) {
      NearEdge joined = join(a.edge, b.edge);
      EXPECT_EQ(factorize(joined).size(), factorize(a.edge).size() + factorize(b.edge).size())
          << a.name << " . " << b.name;
      EXPECT_EQ(max_near_edge_poly(joined), max_near_edge_poly(a.edge) * max_near_edge_poly(b.edge))
          << a.name << " . " << b.name;
      EXPECT_EQ(complete_near_edge_poly(joined),
                complete_near_edge_poly(a.edge) * complete_near_edge_poly(b.edge))
          << a.name << " . " << b.name;
    }
}

TEST(Mirror, Examples) {
  EXPECT_EQ(complete_near_edge_poly(vertical_mirror(e3(1))), complete_near_edge_poly(e3(3)));
  EXPECT_EQ(vertical_mirror(e1()), e1());
  for (const auto& entry : catalog()) {
    EXPECT_EQ(vertical_mirror(vertical_mirror(entry.edge)), entry.edge);
    EXPECT_EQ(complete_near_edge_poly(vertical_mirror(entry.edge)),
              complete_near_edge_poly(entry.edge))
        << entry.name;
  }
  EXPECT_TRUE(same_order_type(vertical_mirror(e3(4)), e3(5)));
  EXPECT_TRUE(same_order_type(vertical_mirror(e3(6)), e3(8)));
}

TEST(Generic, Examples) {
  EXPECT_FALSE(is_generic(e23()));
  EXPECT_TRUE(is_generic(e21()));
  EXPECT_TRUE(is_generic(ea()));
  for (int j = 1; j <= 8; ++j) EXPECT_TRUE(is_generic(e3(j))) << j;
  for (int j = 9; j <= 17; ++j) EXPECT_FALSE(is_generic(e3(j))) << j;
}

TEST(ConvexNearEdge, Examples) {
  for (std::size_t n = 2; n <= 7; ++n) {
    std::vector<int> minus(n - 1, -1);
    auto factors = factorize(convex_near_edge(minus));
    EXPECT_EQ(factors.size(), n);
    for (const auto& f : factors) EXPECT_EQ(f.weight(), 1u);
  }
  std::vector<int> plus{1};
  EXPECT_TRUE(same_order_type(convex_near_edge(plus), e21()));
  EXPECT_THROW(convex_near_edge(std::vector<int>{}), std::invalid_argument);
  EXPECT_THROW(convex_near_edge(std::vector<int>{1, 0}), std::invalid_argument);
}

TEST(ConvexNearEdge, GenericAndExtremal) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<int> signs(1 + trial % 8);
    for (int& s : signs) s = coin(rng) ? 1 : -1;
    NearEdge e = convex_near_edge(signs);
    EXPECT_TRUE(is_generic(e));
    EXPECT_EQ(convex_hull(PointConfiguration(e.points())).size(), e.points().size());
  }
}

TEST(Legendre, Symbols) {
  EXPECT_TRUE(is_odd_prime(3));
  EXPECT_FALSE(is_odd_prime(2));
  EXPECT_FALSE(is_odd_prime(9));
  EXPECT_EQ(legendre_symbol(4, 7), 1);
  EXPECT_EQ(legendre_symbol(3, 7), -1);
  EXPECT_EQ(legendre_symbol(7, 7), 0);
}

TEST(Legendre, NearEdges) {
  EXPECT_EQ(legendre_near_edge(3, false), convex_near_edge(std::vector<int>{1, -1}));
  EXPECT_EQ(legendre_near_edge(5, false), convex_near_edge(std::vector<int>{1, -1, -1, 1}));
  EXPECT_EQ(legendre_near_edge(5, true), convex_near_edge(std::vector<int>{-1, 1, 1, -1}));
  EXPECT_EQ(legendre_near_edge(7, false).weight(), 7u);
  EXPECT_THROW(legendre_near_edge(9, false), std::invalid_argument);
  EXPECT_THROW(legendre_near_edge(2, false), std::invalid_argument);
}

TEST(Legendre, ThreeModFourVariantsAgree) {
  for (unsigned long prime : {3ul, 7ul, 11ul})
    EXPECT_EQ(complete_near_edge_poly(legendre_near_edge(prime, false)),
              complete_near_edge_poly(legendre_near_edge(prime, true)))
        << prime;
}

TEST(Properties, EpsInvariance) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    NearEdge e = random_near_edge(rng, 1 + trial % 5);
    const IntPoly max = max_near_edge_poly(e);
    const BiPoly complete = complete_near_edge_poly(e);
    for (Rational eps : {make_rational(1, 2), make_rational(1, 3), make_rational(2)}) {
      EXPECT_EQ(max_near_edge_poly(scale_eps(e, eps)), max);
      EXPECT_EQ(complete_near_edge_poly(scale_eps(e, eps)), complete);
    }
  }
}

TEST(Properties, FlatReduction) {
  for (std::size_t m = 1; m <= 6; ++m) {
    NearEdge flat = NearEdge::from_heights(std::vector<long>(m + 1, 0));
    EXPECT_EQ(max_near_edge_poly(flat), max_edge_poly(static_cast<unsigned>(m)));
    EXPECT_EQ(complete_near_edge_poly(flat), complete_edge_poly(static_cast<unsigned>(m)));
  }
}

TEST(Properties, TopSliceIsMaximalPolynomial) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    NearEdge e = random_near_edge(rng, 1 + trial % 6);
    EXPECT_EQ(complete_near_edge_poly(e).slice(static_cast<unsigned>(e.weight())),
              max_near_edge_poly(e));
  }
}

}  // namespace
}  // namespace nearconvex
