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

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "nearconvex/geometry.h"
#include "nearconvex/poly.h"

namespace nearconvex {

/// Malformed textual input. The message names the line or token at fault.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "a" or "a/b" with optional leading minus; b must be nonzero.
Rational parse_rational(const std::string& token);

/// One "x y" pair per line; blank lines and text after '#' are ignored.
std::vector<Point> parse_points(std::istream& in);
std::vector<Point> read_points_file(const std::string& path);

/// Comma separated positive integers, e.g. "1,5,2,3,4".
std::vector<unsigned> parse_weights(const std::string& text);

nlohmann::ordered_json to_json(const SPoly& p);
nlohmann::ordered_json to_json(const IntPoly& p);
nlohmann::ordered_json to_json(const BiPoly& p);

/// Inverses of to_json. Throw ParseError on schema violations.
SPoly spoly_from_json(const nlohmann::ordered_json& j);
IntPoly intpoly_from_json(const nlohmann::ordered_json& j);
BiPoly bipoly_from_json(const nlohmann::ordered_json& j);

}  // namespace nearconvex
