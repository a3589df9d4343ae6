// Copyright 2026 The rtile Authors
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

#ifndef RTILE_SOLVER_HPP_
#define RTILE_SOLVER_HPP_

#include <cstdint>
#include <optional>

#include "rtile/instance.hpp"

namespace rtile::solver {

struct SearchLimits {
  // Search nodes expanded before giving up with kScaleExceeded.
  std::uint64_t max_nodes = 200'000'000;

  // Default limits, overridden by a positive RTILE_SEARCH_LIMIT value.
  static SearchLimits from_environment();
};

// Exhaustive branch and bound. Returns the lexicographically least tiling
// (tiles sorted by corner) with at most p tiles of weight at most W.
std::optional<Tiling> exact_decide(const WeightGrid& grid, std::int64_t p,
                                   int W, const SearchLimits& limits = {});

struct Optimum {
  int W = 0;
  Tiling tiling;
};

// Least achievable maximum tile weight using at most p tiles.
// Throws kInfeasibleBudget when p < 1.
Optimum exact_optimize(const WeightGrid& grid, std::int64_t p,
                       const SearchLimits& limits = {});

struct StructuredMinimum {
  std::int64_t tiles = 0;  // minimum tile count at W = 3
  Tiling witness;          // sorted
};

// Minimum number of weight-3-bounded tiles for a grid over {1,2,3}.
// Throws kPreconditionViolated for other weights.
StructuredMinimum structured_min(const WeightGrid& grid,
                                 const SearchLimits& limits = {});

// Same verdict as exact_decide for instances with W = 3 and weights in
// {1,2,3}; scales to reduction-sized grids.
std::optional<Tiling> structured_decide(const RtileInstance& instance,
                                        const SearchLimits& limits = {});

// Baseline: binary search on W with row bands sliced into column strips.
// Throws kInfeasibleBudget when p < 1.
Optimum approx_greedy(const WeightGrid& grid, std::int64_t p);

}  // namespace rtile::solver

#endif  // RTILE_SOLVER_HPP_
