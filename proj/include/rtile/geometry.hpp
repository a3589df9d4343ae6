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

#ifndef RTILE_GEOMETRY_HPP_
#define RTILE_GEOMETRY_HPP_

#include <algorithm>
#include <array>
#include <compare>
#include <cstdlib>
#include <functional>
#include <string>

namespace rtile {

// A grid cell addressed by 0-based row and column.
struct Cell {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;

  Cell operator+(const Cell& o) const { return {row + o.row, col + o.col}; }
  Cell operator-(const Cell& o) const { return {row - o.row, col - o.col}; }
};

inline constexpr std::array<Cell, 4> kOrthogonalSteps = {
    Cell{-1, 0}, Cell{0, 1}, Cell{1, 0}, Cell{0, -1}};

inline int chebyshev(const Cell& a, const Cell& b) {
  return std::max(std::abs(a.row - b.row), std::abs(a.col - b.col));
}

inline int manhattan(const Cell& a, const Cell& b) {
  return std::abs(a.row - b.row) + std::abs(a.col - b.col);
}

inline bool orthogonally_adjacent(const Cell& a, const Cell& b) {
  return manhattan(a, b) == 1;
}

// True when the three cells lie on one row or one column, in order, each
// adjacent to the next.
inline bool straight_triple(const Cell& a, const Cell& b, const Cell& c) {
  return orthogonally_adjacent(a, b) && orthogonally_adjacent(b, c) &&
         (b - a) == (c - b);
}

inline std::string to_string(const Cell& c) {
  return std::to_string(c.row) + "," + std::to_string(c.col);
}

struct CellHash {
  std::size_t operator()(const Cell& c) const noexcept {
    return std::hash<long long>()((static_cast<long long>(c.row) << 32) ^
                                  static_cast<unsigned>(c.col));
  }
};

}  // namespace rtile

#endif  // RTILE_GEOMETRY_HPP_
