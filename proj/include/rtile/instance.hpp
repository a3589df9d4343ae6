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

#ifndef RTILE_INSTANCE_HPP_
#define RTILE_INSTANCE_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rtile/error.hpp"
#include "rtile/geometry.hpp"

namespace rtile {

// Square grid of positive integer weights, row-major.
class WeightGrid {
 public:
  WeightGrid() = default;
  WeightGrid(int side, int fill) : side_(side), values_(side * side, fill) {}
  // Throws kInvalidArgument unless the rows form a square.
  static WeightGrid from_rows(const std::vector<std::vector<int>>& rows);

  int side() const { return side_; }
  int cell_count() const { return side_ * side_; }
  bool contains(const Cell& c) const {
    return c.row >= 0 && c.col >= 0 && c.row < side_ && c.col < side_;
  }
  int at(int row, int col) const { return values_[row * side_ + col]; }
  int at(const Cell& c) const { return at(c.row, c.col); }
  int& at(int row, int col) { return values_[row * side_ + col]; }
  int& at(const Cell& c) { return at(c.row, c.col); }
  const std::vector<int>& values() const { return values_; }
  int max_value() const;
  std::int64_t total() const;

  friend bool operator==(const WeightGrid&, const WeightGrid&) = default;

 private:
  int side_ = 0;
  std::vector<int> values_;
};

struct RtileInstance {
  WeightGrid grid;
  std::int64_t p = 0;
  int W = 0;

  friend bool operator==(const RtileInstance&, const RtileInstance&) = default;
};

// Inclusive rectangle [r1, r2] x [c1, c2].
struct Tile {
  int r1 = 0;
  int c1 = 0;
  int r2 = 0;
  int c2 = 0;

  friend auto operator<=>(const Tile&, const Tile&) = default;

  int rows() const { return r2 - r1 + 1; }
  int cols() const { return c2 - c1 + 1; }
  int area() const { return rows() * cols(); }
  bool contains(const Cell& c) const {
    return c.row >= r1 && c.row <= r2 && c.col >= c1 && c.col <= c2;
  }
  static Tile single(const Cell& c) { return {c.row, c.col, c.row, c.col}; }
  static Tile spanning(const Cell& a, const Cell& b);
};

using Tiling = std::vector<Tile>;

// Sum of covered weights. Throws kOutOfBounds for tiles outside the grid.
std::int64_t tile_weight(const WeightGrid& grid, const Tile& t);

// Reports overlaps, gaps, tiles heavier than W and a tile count above p.
ValidationReport validate_tiling(const RtileInstance& instance,
                                 const Tiling& tiles);

// Instance text: "rtile <side> <p> <W>" followed by side rows of weights.
std::string emit_instance(const RtileInstance& instance);
RtileInstance parse_instance(std::string_view text);

// Tiling text: one "r1 c1 r2 c2" line per tile, 0-based and inclusive.
std::string emit_tiling(const Tiling& tiles);
Tiling parse_tiling(std::string_view text);

}  // namespace rtile

#endif  // RTILE_INSTANCE_HPP_
