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

#include "nearconvex/io.h"

#include <fstream>
#include <limits>
#include <regex>
#include <sstream>

namespace nearconvex {

Rational parse_rational(const std::string& token) {
  static const std::regex form(R"(-?[0-9]+(/[0-9]+)?)");
  if (!std::regex_match(token, form))
    throw ParseError("not a rational number: '" + token + "'");
  const auto slash = token.find('/');
  BigInt num(token.substr(0, slash));
  BigInt den = slash == std::string::npos ? BigInt(1) : BigInt(token.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator: '" + token + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::vector<Point> parse_points(std::istream& in) {
  std::vector<Point> pts;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    const std::string where = "line " + std::to_string(number) + ": ";
    if (tokens.size() != 2)
      throw ParseError(where + "expected 2 coordinates, found " + std::to_string(tokens.size()));
    try {
      pts.push_back({parse_rational(tokens[0]), parse_rational(tokens[1])});
    } catch (const ParseError& e) {
      throw ParseError(where + e.what());
    }
  }
  return pts;
}

std::vector<Point> read_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return parse_points(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::vector<unsigned> parse_weights(const std::string& text) {
  std::vector<unsigned> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const std::string token = text.substr(start, comma == std::string::npos ? comma : comma - start);
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos ||
        token.size() > 9)
      throw ParseError("bad weight '" + token + "'");
    out.push_back(static_cast<unsigned>(std::stoul(token)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

namespace {

template <char Var>
nlohmann::ordered_json uni_to_json(const UniPoly<Var>& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    terms.push_back({{"exp", it->first}, {"coeff", to_string(it->second)}});
  return {{"variable", std::string(1, Var)}, {"terms", terms}};
}

BigInt coeff_from_json(const nlohmann::ordered_json& term) {
  if (!term.contains("coeff") || !term["coeff"].is_string())
    throw ParseError("term without a string coeff");
  const std::string text = term["coeff"].get<std::string>();
  static const std::regex form(R"(-?[0-9]+)");
  if (!std::regex_match(text, form)) throw ParseError("bad coeff '" + text + "'");
  return BigInt(text);
}

unsigned exponent_from_json(const nlohmann::ordered_json& term, const char* key) {
  if (!term.contains(key) || !term[key].is_number_unsigned())
    throw ParseError(std::string("term without unsigned '") + key + "'");
  auto e = term[key].get<std::uint64_t>();
  if (e > std::numeric_limits<unsigned>::max()) throw ParseError("exponent too large");
  return static_cast<unsigned>(e);
}

template <char Var>
UniPoly<Var> uni_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object() || j.value("variable", "") != std::string(1, Var) ||
      !j.contains("terms") || !j["terms"].is_array())
    throw ParseError(std::string("expected a polynomial in ") + Var);
  UniPoly<Var> p;
  for (const auto& term : j["terms"])
    p += UniPoly<Var>::monomial(exponent_from_json(term, "exp"), coeff_from_json(term));
  return p;
}

}  // namespace

nlohmann::ordered_json to_json(const SPoly& p) { return uni_to_json(p); }
nlohmann::ordered_json to_json(const IntPoly& p) { return uni_to_json(p); }

nlohmann::ordered_json to_json(const BiPoly& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    terms.push_back({{"s", it->first.first}, {"t", it->first.second},
                     {"coeff", to_string(it->second)}});
  return {{"variables", {"s", "t"}}, {"terms", terms}};
}

SPoly spoly_from_json(const nlohmann::ordered_json& j) { return uni_from_json<'s'>(j); }
IntPoly intpoly_from_json(const nlohmann::ordered_json& j) { return uni_from_json<'t'>(j); }

BiPoly bipoly_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object() || !j.contains("variables") ||
      j["variables"] != nlohmann::ordered_json::array({"s", "t"}) || !j.contains("terms") ||
      !j["terms"].is_array())
    throw ParseError("expected a polynomial in s and t");
  BiPoly p;
  for (const auto& term : j["terms"])
    p += BiPoly::monomial(exponent_from_json(term, "s"), exponent_from_json(term, "t"),
                          coeff_from_json(term));
  return p;
}

}  // namespace nearconvex
