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
#include "rtile/render.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "rtile/error.hpp"

namespace rtile::render {
namespace {

constexpr int kCellPx = 20;

// Tile index per cell, -1 where no tile lies.
std::vector<int> owners(const WeightGrid& grid, const Tiling& tiles) {
  const int side = grid.side();
  std::vector<int> owner(grid.cell_count(), -1);
  for (int i = 0; i < static_cast<int>(tiles.size()); ++i) {
    const Tile& t = tiles[i];
    if (t.r1 < 0 || t.c1 < 0 || t.r2 >= side || t.c2 >= side || t.r1 > t.r2 ||
        t.c1 > t.c2) {
      throw Error(ErrorCode::kOutOfBounds,
                  "tile " + std::to_string(i) + " does not fit a " +
                      std::to_string(side) + "x" + std::to_string(side) +
                      " grid");
    }
    for (int r = t.r1; r <= t.r2; ++r)
      for (int c = t.c1; c <= t.c2; ++c) owner[r * side + c] = i;
  }
  return owner;
}

// Box-drawing junction by its arms: bit 0 up, 1 down, 2 left, 3 right.
const char* junction(int arms) {
  static constexpr std::array<const char*, 16> kGlyphs = {
      " ", "╵", "╷", "│", "╴", "┘", "┐", "┤",
      "╶", "└", "┌", "├", "─", "┴", "┬", "┼"};
  return kGlyphs[arms];
}

std::string fill_colour(int value) {
  switch (value) {
    case 1: return "#f4f1de";
    case 2: return "#81b29a";
    case 3: return "#3d405b";
    default: return "#e07a5f";
  }
}

}  // namespace

std::string ascii(const WeightGrid& grid, const Tiling* tiles) {
  const int side = grid.side();
  int width = 1;
  for (int v : grid.values())
    width = std::max(width, static_cast<int>(std::to_string(v).size()));
  auto padded = [&](int v) {
    std::string s = std::to_string(v);
    return std::string(width - s.size(), ' ') + s;
  };
  std::ostringstream out;
  if (!tiles) {
    for (int r = 0; r < side; ++r) {
      for (int c = 0; c < side; ++c) out << (c ? " " : "") << padded(grid.at(r, c));
      out << '\n';
    }
    return out.str();
  }
  const std::vector<int> owner = owners(grid, *tiles);
  auto who = [&](int r, int c) {
    if (r < 0 || c < 0 || r >= side || c >= side) return -2;  // outside
    return owner[r * side + c];
  };
  // A wall separates two cells (or a cell and the outside) that no single
  // tile covers together.
  auto wall = [&](int r1, int c1, int r2, int c2) {
    const int a = who(r1, c1);
    const int b = who(r2, c2);
    if (a == -2 && b == -2) return false;
    return a != b || a == -1;
  };
  std::string horizontal;
  for (int k = 0; k < width; ++k) horizontal += "─";
  const std::string blank(width, ' ');
  for (int r = 0; r <= side; ++r) {
    // Line of corners and horizontal walls above row r.
    for (int c = 0; c <= side; ++c) {
      int arms = 0;
      if (wall(r - 1, c - 1, r - 1, c)) arms |= 1;
      if (wall(r, c - 1, r, c)) arms |= 2;
      if (wall(r - 1, c - 1, r, c - 1)) arms |= 4;
      if (wall(r - 1, c, r, c)) arms |= 8;
      out << junction(arms);
      if (c < side) out << (wall(r - 1, c, r, c) ? horizontal : blank);
    }
    out << '\n';
    if (r == side) break;
    for (int c = 0; c <= side; ++c) {
      out << (wall(r, c - 1, r, c) ? "│" : " ");
      if (c < side) out << padded(grid.at(r, c));
    }
    out << '\n';
  }
  return out.str();
}

std::string svg(const WeightGrid& grid, const Tiling* tiles) {
  const int side = grid.side();
  const int px = side * kCellPx;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px
      << "\" height=\"" << px << "\" viewBox=\"0 0 " << px << ' ' << px
      << "\">\n";
  out << "<g class=\"cells\" font-family=\"monospace\" font-size=\"12\" "
         "text-anchor=\"middle\">\n";
  for (int r = 0; r < side; ++r) {
    for (int c = 0; c < side; ++c) {
      const int v = grid.at(r, c);
      out << "<rect x=\"" << c * kCellPx << "\" y=\"" << r * kCellPx
          << "\" width=\"" << kCellPx << "\" height=\"" << kCellPx
          << "\" fill=\"" << fill_colour(v) << "\"/>";
      out << "<text x=\"" << c * kCellPx + kCellPx / 2 << "\" y=\""
          << r * kCellPx + 14 << "\" fill=\"" << (v == 3 ? "#ffffff" : "#000000")
          << "\">" << v << "</text>\n";
    }
  }
  out << "</g>\n";
  if (tiles) {
    owners(grid, *tiles);  // bounds check
    out << "<g class=\"tiles\" fill=\"none\" stroke=\"#e63946\" "
           "stroke-width=\"2\">\n";
    for (const Tile& t : *tiles) {
      out << "<g class=\"tile\"><rect x=\"" << t.c1 * kCellPx + 1 << "\" y=\""
          << t.r1 * kCellPx + 1 << "\" width=\"" << t.cols() * kCellPx - 2
          << "\" height=\"" << t.rows() * kCellPx - 2 << "\"/></g>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace rtile::render
