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
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "rtile/error.hpp"
#include "rtile/solver.hpp"

namespace rtile::solver {
namespace {

// Pieces are the only tiles a weight-3 bound allows away from the 3-cells:
// singletons, dominoes of sum <= 3 and straight trominoes of three 1s.
struct Piece {
  Tile tile;
  std::vector<int> cells;  // cells[0] is the top-left cell
};

// Cells ahead of the cursor that earlier pieces already cover, sorted.
using Profile = std::vector<int>;

struct ProfileHash {
  std::size_t operator()(const Profile& s) const noexcept {
    return boost::hash_range(s.begin(), s.end());
  }
};

// Exact minimum piece cover of the non-3 cells by a row-major sweep. At each
// cell either an earlier piece covers it, or a piece with this cell as its
// top-left corner is placed. The profile of covered cells ahead is all the
// sweep needs to remember, and it stays small because pieces reach at most
// two rows down.
class PieceCover {
 public:
  PieceCover(const WeightGrid& grid, const SearchLimits& limits)
      : limits_(limits) {
    const int side = grid.side();
    std::vector<int> index(grid.cell_count(), -1);
    for (int r = 0; r < side; ++r)
      for (int c = 0; c < side; ++c)
        if (grid.at(r, c) != 3) {
          index[r * side + c] = static_cast<int>(cells_.size());
          cells_.push_back({r, c});
        }
    auto id = [&](int r, int c) -> int {
      if (r >= side || c >= side) return -1;
      return index[r * side + c];
    };
    starts_.assign(cells_.size(), {});
    for (const Cell& cell : cells_) {
      const int r = cell.row;
      const int c = cell.col;
      const int a = id(r, c);
      add_piece({r, c, r, c}, {a});
      for (Cell step : {Cell{0, 1}, Cell{1, 0}}) {
        const int b = id(r + step.row, c + step.col);
        if (b < 0) continue;
        const Cell cb = cells_[b];
        if (grid.at(cell) + grid.at(cb) <= 3) {
          add_piece(Tile::spanning(cell, cb), {a, b});
        }
        const int d = id(r + 2 * step.row, c + 2 * step.col);
        if (d < 0) continue;
        const Cell cd = cells_[d];
        if (grid.at(cell) + grid.at(cb) + grid.at(cd) <= 3) {
          add_piece(Tile::spanning(cell, cd), {a, b, d});
        }
      }
    }
  }

  std::int64_t minimum() const { return best_; }
  const Tiling& witness() const { return witness_; }

  void run() {
    // One layer per cell: the reachable profiles, their cost, and how each
    // was reached.
    struct Step {
      int parent;
      int piece;  // -1 when the cell was already covered
    };
    std::vector<std::vector<Step>> trace(cells_.size());
    std::vector<Profile> profiles{Profile{}};
    std::vector<std::int64_t> costs{0};
    for (int i = 0; i < static_cast<int>(cells_.size()); ++i) {
      std::vector<Profile> next;
      std::vector<std::int64_t> next_costs;
      std::unordered_map<Profile, int, ProfileHash> seen;
      auto relax = [&](Profile profile, std::int64_t cost, Step step) {
        auto [it, fresh] = seen.try_emplace(profile, next.size());
        if (fresh) {
          next.push_back(std::move(profile));
          next_costs.push_back(cost);
          trace[i].push_back(step);
        } else if (cost < next_costs[it->second]) {
          next_costs[it->second] = cost;
          trace[i][it->second] = step;
        }
      };
      for (int j = 0; j < static_cast<int>(profiles.size()); ++j) {
        if (++nodes_ > limits_.max_nodes) {
          throw Error(ErrorCode::kScaleExceeded,
                      "structured search exceeded " +
                          std::to_string(limits_.max_nodes) + " nodes");
        }
        const Profile& profile = profiles[j];
        if (!profile.empty() && profile.front() == i) {
          relax(Profile(profile.begin() + 1, profile.end()), costs[j],
                {j, -1});
          continue;
        }
        for (int p : starts_[i]) {
          const auto& cells = pieces_[p].cells;
          bool free = true;
          for (std::size_t k = 1; k < cells.size() && free; ++k)
            free = !std::binary_search(profile.begin(), profile.end(),
                                       cells[k]);
          if (!free) continue;
          Profile grown = profile;
          grown.insert(grown.end(), cells.begin() + 1, cells.end());
          std::sort(grown.begin(), grown.end());
          relax(std::move(grown), costs[j] + 1, {j, p});
        }
      }
      profiles = std::move(next);
      costs = std::move(next_costs);
    }
    // Every cell is covered once the sweep ends, so only the empty profile
    // survives.
    best_ = costs.empty() ? 0 : costs.front();
    int at = 0;
    for (int i = static_cast<int>(cells_.size()) - 1; i >= 0; --i) {
      const Step& step = trace[i][at];
      if (step.piece >= 0) witness_.push_back(pieces_[step.piece].tile);
      at = step.parent;
    }
  }

 private:
  void add_piece(const Tile& t, std::vector<int> cells) {
    starts_[cells.front()].push_back(static_cast<int>(pieces_.size()));
    pieces_.push_back({t, std::move(cells)});
  }

  SearchLimits limits_;
  std::vector<Cell> cells_;
  std::vector<Piece> pieces_;
  std::vector<std::vector<int>> starts_;  // pieces by top-left cell
  std::uint64_t nodes_ = 0;
  std::int64_t best_ = 0;
  Tiling witness_;
};

void require_unit_weights(const WeightGrid& grid) {
  for (int v : grid.values()) {
    if (v < 1 || v > 3) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "structured search needs weights in {1,2,3}, found " +
                      std::to_string(v));
    }
  }
}

// Most adjacent non-3 pairs straddling a single row boundary (or column
// boundary when by_column).
int widest_crossing(const WeightGrid& grid, bool by_column) {
  int widest = 0;
  for (int line = 0; line + 1 < grid.side(); ++line) {
    int count = 0;
    for (int i = 0; i < grid.side(); ++i) {
      const Cell a = by_column ? Cell{i, line} : Cell{line, i};
      const Cell b = by_column ? Cell{i, line + 1} : Cell{line + 1, i};
      count += grid.at(a) != 3 && grid.at(b) != 3;
    }
    widest = std::max(widest, count);
  }
  return widest;
}

WeightGrid transposed(const WeightGrid& grid) {
  WeightGrid out(grid.side(), 0);
  for (int r = 0; r < grid.side(); ++r)
    for (int c = 0; c < grid.side(); ++c) out.at(c, r) = grid.at(r, c);
  return out;
}

}  // namespace

StructuredMinimum structured_min(const WeightGrid& grid,
                                 const SearchLimits& limits) {
  require_unit_weights(grid);
  // The sweep remembers pieces that cross the line behind the cursor, so it
  // runs across whichever axis such pieces cross less often.
  const bool transpose = widest_crossing(grid, true) < widest_crossing(grid, false);
  PieceCover cover(transpose ? transposed(grid) : grid, limits);
  cover.run();
  StructuredMinimum result;
  result.tiles = cover.minimum();
  result.witness = cover.witness();
  if (transpose) {
    for (Tile& t : result.witness) t = {t.c1, t.r1, t.c2, t.r2};
  }
  for (int r = 0; r < grid.side(); ++r)
    for (int c = 0; c < grid.side(); ++c)
      if (grid.at(r, c) == 3) {
        ++result.tiles;
        result.witness.push_back(Tile::single({r, c}));
      }
  std::sort(result.witness.begin(), result.witness.end());
  return result;
}

std::optional<Tiling> structured_decide(const RtileInstance& instance,
                                        const SearchLimits& limits) {
  if (instance.W != 3) {
    throw Error(ErrorCode::kPreconditionViolated,
                "structured search needs W = 3, got " +
                    std::to_string(instance.W));
  }
  auto best = structured_min(instance.grid, limits);
  if (best.tiles > instance.p) return std::nullopt;
  return std::move(best.witness);
}

}  // namespace rtile::solver
