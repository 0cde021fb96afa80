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

#include "nearconvex/catalan.h"

#include <mutex>
#include <vector>

namespace nearconvex {

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  if (k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt from_u128(unsigned __int128 v) {
  BigInt hi = static_cast<unsigned long>(v >> 64);
  BigInt lo = static_cast<unsigned long>(v & ~0UL);
  hi <<= 64;
  hi += lo;
  return hi;
}

namespace detail {

void append_term(std::string& out, const BigInt& c, char var, unsigned exp,
                 bool first) {
  BigInt mag = abs(c);
  if (first) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (exp == 0) {
    out += mag.get_str();
    return;
  }
  if (mag != 1) out += mag.get_str() + " ";
  out += var;
  if (exp > 1) out += "^" + std::to_string(exp);
}

}  // namespace detail

BiPoly BiPoly::monomial(unsigned s_exp, unsigned t_exp, const BigInt& c) {
  BiPoly p;
  p.add_term(s_exp, t_exp, c);
  return p;
}

BiPoly BiPoly::from_slice(unsigned s_exp, const IntPoly& slice) {
  BiPoly p;
  for (const auto& [e, c] : slice.coeffs()) p.add_term(s_exp, e, c);
  return p;
}

std::optional<unsigned> BiPoly::s_degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.rbegin()->first.first;
}

std::vector<unsigned> BiPoly::s_exponents() const {
  std::vector<unsigned> out;
  for (const auto& [key, c] : coeffs_)
    if (out.empty() || out.back() != key.first) out.push_back(key.first);
  return out;
}

void BiPoly::add_term(unsigned s_exp, unsigned t_exp, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace({s_exp, t_exp}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

IntPoly BiPoly::slice(unsigned s_exp) const {
  IntPoly p;
  for (auto it = coeffs_.lower_bound({s_exp, 0});
       it != coeffs_.end() && it->first.first == s_exp; ++it)
    p.add_term(it->first.second, it->second);
  return p;
}

IntPoly BiPoly::at_s_one() const {
  IntPoly p;
  for (const auto& [key, c] : coeffs_) p.add_term(key.second, c);
  return p;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [key, c] : o.coeffs_) add_term(key.first, key.second, c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ka, ca] : a.coeffs_)
    for (const auto& [kb, cb] : b.coeffs_)
      r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

std::string BiPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  auto exps = s_exponents();
  for (auto it = exps.rbegin(); it != exps.rend(); ++it) {
    IntPoly sl = slice(*it);
    if (!out.empty()) out += " + ";
    bool monomial = sl.coeffs().size() == 1;
    std::string body = sl.to_string();
    if (*it == 0) {
      out += monomial ? body : "(" + body + ")";
      continue;
    }
    if (monomial) {
      out += body == "1" ? "" : body == "-1" ? "-" : body + " ";
    } else {
      out += "(" + body + ") ";
    }
    out += "s";
    if (*it > 1) out += "^" + std::to_string(*it);
  }
  return out;
}

BigInt catalan(unsigned k) {
  static std::mutex mu;
  static std::vector<BigInt> table{BigInt(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (table.size() <= k) {
    unsigned long n = table.size();
    BigInt next = table.back() * (2 * (2 * n - 1));
    next /= n + 1;
    table.push_back(std::move(next));
  }
  return table[k];
}

IntPoly max_edge_poly(unsigned m) {
  IntPoly p;
  for (unsigned k = 0; 2 * k <= m; ++k) {
    BigInt c = binomial(m - k, k);
    if (k % 2) c = -c;
    p.add_term(m - k, c);
  }
  return p;
}

BiPoly complete_edge_poly(unsigned m) {
  if (m == 0) throw std::invalid_argument("complete_edge_poly: weight must be >= 1");
  BiPoly p;
  for (unsigned k = 1; k <= m; ++k) {
    IntPoly slice = max_edge_poly(k) * binomial(m - 1, k - 1);
    p += BiPoly::from_slice(k, slice);
  }
  return p;
}

BigInt catalan_pairing(const IntPoly& p) {
  BigInt sum = 0;
  for (const auto& [e, c] : p.coeffs()) {
    if (e < 2)
      throw PairingError("catalan_pairing: term of t-degree " +
                         std::to_string(e) + " has no Catalan image");
    sum += c * catalan(e - 2);
  }
  return sum;
}

SPoly catalan_pairing(const BiPoly& p) {
  SPoly out;
  for (unsigned s : p.s_exponents()) {
    try {
      out.add_term(s, catalan_pairing(p.slice(s)));
    } catch (const PairingError& e) {
      throw PairingError(std::string(e.what()) + " (in the s^" +
                         std::to_string(s) + " slice)");
    }
  }
  return out;
}

}  // namespace nearconvex
