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
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>
#include <vector>

#include "rtile/error.hpp"
#include "rtile/solver.hpp"

namespace rtile::solver {

SearchLimits SearchLimits::from_environment() {
  SearchLimits limits;
  if (const char* env = std::getenv("RTILE_SEARCH_LIMIT")) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
    if (ec == std::errc() && *ptr == '\0' && value > 0) {
      limits.max_nodes = value;
    }
  }
  return limits;
}

namespace {

class PrefixSums {
 public:
  explicit PrefixSums(const WeightGrid& g)
      : side_(g.side()), sums_((side_ + 1) * (side_ + 1), 0) {
    for (int r = 0; r < side_; ++r)
      for (int c = 0; c < side_; ++c)
        sums_[(r + 1) * (side_ + 1) + c + 1] =
            g.at(r, c) + sums_[r * (side_ + 1) + c + 1] +
            sums_[(r + 1) * (side_ + 1) + c] - sums_[r * (side_ + 1) + c];
  }

  std::int64_t weight(int r1, int c1, int r2, int c2) const {
    const int w = side_ + 1;
    return sums_[(r2 + 1) * w + c2 + 1] - sums_[r1 * w + c2 + 1] -
           sums_[(r2 + 1) * w + c1] + sums_[r1 * w + c1];
  }

 private:
  int side_;
  std::vector<std::int64_t> sums_;
};

class ExactSearch {
 public:
  ExactSearch(const WeightGrid& grid, std::int64_t p, int W,
              const SearchLimits& limits)
      : grid_(grid),
        sums_(grid),
        p_(p),
        W_(W),
        limits_(limits),
        covered_(grid.cell_count(), 0) {
    for (int v : grid.values()) {
      remaining_weight_ += v;
      if (2 * static_cast<std::int64_t>(v) > W_) ++heavy_;
    }
  }

  std::optional<Tiling> run() {
    if (p_ < 1 || grid_.max_value() > W_) return std::nullopt;
    if (dfs(0)) return chosen_;
    return std::nullopt;
  }

 private:
  bool is_heavy(int v) const { return 2 * static_cast<std::int64_t>(v) > W_; }

  void set_covered(const Tile& t, char value) {
    for (int r = t.r1; r <= t.r2; ++r) {
      for (int c = t.c1; c <= t.c2; ++c) {
        covered_[r * grid_.side() + c] = value;
        if (is_heavy(grid_.at(r, c))) heavy_ += value ? -1 : 1;
      }
    }
  }

  bool dfs(int from) {
    if (++nodes_ > limits_.max_nodes) {
      throw Error(ErrorCode::kScaleExceeded,
                  "exact search exceeded " +
                      std::to_string(limits_.max_nodes) + " nodes");
    }
    const int side = grid_.side();
    int pos = from;
    while (pos < grid_.cell_count() && covered_[pos]) ++pos;
    if (pos == grid_.cell_count()) return true;

    const auto used = static_cast<std::int64_t>(chosen_.size());
    const std::int64_t bound =
        std::max<std::int64_t>((remaining_weight_ + W_ - 1) / W_, heavy_);
    if (used + bound > p_) return false;

    const int r = pos / side;
    const int c = pos % side;
    int col_limit = side;  // first blocked column seen in rows above
    for (int r2 = r; r2 < side; ++r2) {
      if (covered_[r2 * side + c] || sums_.weight(r, c, r2, c) > W_) break;
      for (int c2 = c; c2 < col_limit; ++c2) {
        const std::int64_t w = sums_.weight(r, c, r2, c2);
        if (covered_[r2 * side + c2] || w > W_) {
          col_limit = c2;
          break;
        }
        const Tile t{r, c, r2, c2};
        set_covered(t, 1);
        remaining_weight_ -= w;
        chosen_.push_back(t);
        if (dfs(pos + 1)) return true;
        chosen_.pop_back();
        remaining_weight_ += w;
        set_covered(t, 0);
      }
    }
    return false;
  }

  const WeightGrid& grid_;
  PrefixSums sums_;
  std::int64_t p_;
  int W_;
  SearchLimits limits_;
  std::vector<char> covered_;
  std::int64_t remaining_weight_ = 0;
  std::int64_t heavy_ = 0;
  std::uint64_t nodes_ = 0;
  Tiling chosen_;
};

}  // namespace

std::optional<Tiling> exact_decide(const WeightGrid& grid, std::int64_t p,
                                   int W, const SearchLimits& limits) {
  return ExactSearch(grid, p, W, limits).run();
}

Optimum exact_optimize(const WeightGrid& grid, std::int64_t p,
                       const SearchLimits& limits) {
  if (p < 1) {
    throw Error(ErrorCode::kInfeasibleBudget, "budget must be at least 1");
  }
  // Every optimum is the weight of some rectangle.
  PrefixSums sums(grid);
  const int side = grid.side();
  const int floor = grid.max_value();
  std::vector<std::int64_t> candidates;
  for (int r1 = 0; r1 < side; ++r1)
    for (int c1 = 0; c1 < side; ++c1)
      for (int r2 = r1; r2 < side; ++r2)
        for (int c2 = c1; c2 < side; ++c2) {
          auto w = sums.weight(r1, c1, r2, c2);
          if (w >= floor) candidates.push_back(w);
        }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  // The full-grid weight is always feasible; find the least feasible one.
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;
  std::optional<Tiling> best = exact_decide(
      grid, p, static_cast<int>(candidates[hi]), limits);
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    auto attempt =
        exact_decide(grid, p, static_cast<int>(candidates[mid]), limits);
    if (attempt) {
      hi = mid;
      best = std::move(attempt);
    } else {
      lo = mid + 1;
    }
  }
  return {static_cast<int>(candidates[lo]), *best};
}

}  // namespace rtile::solver
