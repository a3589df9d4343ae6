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

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "rtile/error.hpp"
#include "rtile/solver.hpp"

namespace rtile::solver {
namespace {

constexpr std::int64_t kInfinite = std::numeric_limits<std::int64_t>::max() / 4;

// Column strips of the band [r1, r2] cut greedily left to right, each as
// wide as W allows. Empty when a single column is already too heavy.
std::vector<Tile> slice_band(const WeightGrid& g, int r1, int r2,
                             std::int64_t W) {
  std::vector<Tile> strips;
  int start = 0;
  std::int64_t weight = 0;
  for (int c = 0; c < g.side(); ++c) {
    std::int64_t column = 0;
    for (int r = r1; r <= r2; ++r) column += g.at(r, c);
    if (column > W) return {};
    if (weight + column > W) {
      strips.push_back({r1, start, r2, c - 1});
      start = c;
      weight = 0;
    }
    weight += column;
  }
  strips.push_back({r1, start, r2, g.side() - 1});
  return strips;
}

// Fewest tiles over all ways to cut the rows into bands; ties prefer
// thinner bands from the top.
Tiling best_banding(const WeightGrid& g, std::int64_t W) {
  const int n = g.side();
  std::vector<std::int64_t> cost(n + 1, kInfinite);
  std::vector<int> height(n + 1, 0);
  cost[n] = 0;
  for (int r = n - 1; r >= 0; --r) {
    for (int h = 1; r + h <= n; ++h) {
      if (cost[r + h] >= kInfinite) continue;
      auto strips = slice_band(g, r, r + h - 1, W);
      if (strips.empty()) break;  // taller bands only get heavier
      const std::int64_t total =
          static_cast<std::int64_t>(strips.size()) + cost[r + h];
      if (total < cost[r]) {
        cost[r] = total;
        height[r] = h;
      }
    }
  }
  Tiling tiles;
  if (cost[0] >= kInfinite) return tiles;
  for (int r = 0; r < n; r += height[r]) {
    for (const Tile& t : slice_band(g, r, r + height[r] - 1, W)) {
      tiles.push_back(t);
    }
  }
  return tiles;
}

}  // namespace

Optimum approx_greedy(const WeightGrid& grid, std::int64_t p) {
  if (p < 1) {
    throw Error(ErrorCode::kInfeasibleBudget, "budget must be at least 1");
  }
  std::int64_t lo = grid.max_value();
  std::int64_t hi = grid.total();  // one tile covering everything
  Tiling best = best_banding(grid, hi);
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    Tiling attempt = best_banding(grid, mid);
    if (!attempt.empty() && static_cast<std::int64_t>(attempt.size()) <= p) {
      hi = mid;
      best = std::move(attempt);
    } else {
      lo = mid + 1;
    }
  }
  std::int64_t max_weight = 0;
  for (const Tile& t : best) max_weight = std::max(max_weight, tile_weight(grid, t));
  return {static_cast<int>(max_weight), best};
}

}  // namespace rtile::solver
