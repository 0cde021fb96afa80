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
#include <map>
#include <vector>

#include "nearconvex/geometry.h"
#include "nearconvex/poly.h"

namespace nearconvex::detail {

/// Counts triangulations of a simple counterclockwise polygon that use every
/// boundary vertex and every listed interior point. Indices refer to the
/// point set behind `ot`. Results are cached per polygon for the lifetime
/// of the counter.
class FullTriangulationCounter {
 public:
  explicit FullTriangulationCounter(const OrderType& ot) : ot_(ot) {}

  BigInt count(const std::vector<std::size_t>& boundary,
               const std::vector<std::size_t>& interior);

 private:
  BigInt count_hollow(const std::vector<std::size_t>& boundary) const;
  BigInt count_filled(const std::vector<std::size_t>& boundary,
                      const std::vector<std::size_t>& interior);

  const OrderType& ot_;
  std::map<std::vector<std::size_t>, BigInt> components_;
  std::map<std::vector<std::size_t>, BigInt> regions_;
};

}  // namespace nearconvex::detail
