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

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nearconvex {

/// Arbitrary-precision signed integer.
using BigInt = mpz_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

/// binom(n, k), zero when k > n.
BigInt binomial(unsigned n, unsigned k);

/// Converts an unsigned 128-bit counter into a BigInt.
BigInt from_u128(unsigned __int128 v);

/**
 * Univariate polynomial with BigInt coefficients, stored sparsely.
 *
 * Zero coefficients are never stored, so two polynomials are equal exactly
 * when their coefficient maps are equal. `Var` only affects printing; it
 * keeps polynomials in t (edge polynomials) and polynomials in s
 * (triangulation polynomials) apart at the type level.
 */
template <char Var>
class UniPoly {
 public:
  using Coeffs = std::map<unsigned, BigInt>;

  UniPoly() = default;

  static UniPoly monomial(unsigned exp, const BigInt& c = 1) {
    UniPoly p;
    p.add_term(exp, c);
    return p;
  }
  static UniPoly constant(const BigInt& c) { return monomial(0, c); }
  static constexpr char variable() { return Var; }

  const Coeffs& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  // nullopt for the zero polynomial.
  std::optional<unsigned> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.rbegin()->first;
  }
  std::optional<unsigned> valuation() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.begin()->first;
  }

  BigInt coeff(unsigned exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? BigInt(0) : it->second;
  }
  BigInt leading_coeff() const {
    return coeffs_.empty() ? BigInt(0) : coeffs_.rbegin()->second;
  }

  void add_term(unsigned exp, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(exp, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  UniPoly& operator+=(const UniPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
    return *this;
  }
  UniPoly& operator*=(const BigInt& k) {
    if (k == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& [e, c] : coeffs_) c *= k;
    return *this;
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const BigInt& k) { return a *= k; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    for (const auto& [ea, ca] : a.coeffs_)
      for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Multiplication by Var^k.
  UniPoly shifted(unsigned k) const {
    UniPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e + k, c);
    return r;
  }

  BigInt evaluate(const BigInt& x) const {
    BigInt acc = 0;
    unsigned prev = degree().value_or(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      for (unsigned i = it->first; i < prev; ++i) acc *= x;
      acc += it->second;
      prev = it->first;
    }
    for (unsigned i = 0; i < prev; ++i) acc *= x;
    return acc;
  }

  UniPoly derivative() const {
    UniPoly r;
    for (const auto& [e, c] : coeffs_)
      if (e > 0) r.add_term(e - 1, c * e);
    return r;
  }

  // Descending-degree form, e.g. "t^4 - 3 t^3 + t^2".
  std::string to_string() const;

 private:
  Coeffs coeffs_;
};

using IntPoly = UniPoly<'t'>;
using SPoly = UniPoly<'s'>;

namespace detail {
// Appends "c v^e" with sign handling; `first` controls the leading separator.
void append_term(std::string& out, const BigInt& c, char var, unsigned exp,
                 bool first);
}  // namespace detail

template <char Var>
std::string UniPoly<Var>::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    detail::append_term(out, it->second, Var, it->first, first);
    first = false;
  }
  return out;
}

/**
 * Polynomial in s and t with BigInt coefficients, keyed by (s exponent,
 * t exponent). Houses complete edge polynomials: each power of s carries a
 * t-polynomial "slice".
 */
class BiPoly {
 public:
  using Key = std::pair<unsigned, unsigned>;  // (s exponent, t exponent)
  using Coeffs = std::map<Key, BigInt>;

  BiPoly() = default;

  static BiPoly monomial(unsigned s_exp, unsigned t_exp, const BigInt& c = 1);
  // slice(t) * s^s_exp
  static BiPoly from_slice(unsigned s_exp, const IntPoly& slice);

  const Coeffs& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::optional<unsigned> s_degree() const;
  std::vector<unsigned> s_exponents() const;  // ascending, no repeats

  void add_term(unsigned s_exp, unsigned t_exp, const BigInt& c);
  IntPoly slice(unsigned s_exp) const;
  IntPoly at_s_one() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // "(t^2 - t) s^2 + t s"
  std::string to_string() const;

 private:
  Coeffs coeffs_;
};

}  // namespace nearconvex
