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
#include <cctype>
#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include "rtile/error.hpp"
#include "rtile/instance.hpp"

namespace rtile {
namespace {

std::vector<std::string_view> tokens_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t j = i;
    while (j < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

// Non-blank lines with their 1-based line numbers.
std::vector<std::pair<int, std::string_view>> content_lines(
    std::string_view text) {
  std::vector<std::pair<int, std::string_view>> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(pos, end - pos);
    if (!tokens_of(line).empty()) out.emplace_back(number, line);
    pos = end + 1;
  }
  return out;
}

template <typename T>
T number_at(std::string_view token, int line) {
  T value{};
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::kSyntax, "line " + std::to_string(line) +
                                        ": not an integer '" +
                                        std::string(token) + "'");
  }
  return value;
}

}  // namespace

WeightGrid WeightGrid::from_rows(const std::vector<std::vector<int>>& rows) {
  const int side = static_cast<int>(rows.size());
  WeightGrid g(side, 0);
  for (int r = 0; r < side; ++r) {
    if (static_cast<int>(rows[r].size()) != side) {
      throw Error(ErrorCode::kInvalidArgument, "grid is not square");
    }
    for (int c = 0; c < side; ++c) g.at(r, c) = rows[r][c];
  }
  return g;
}

int WeightGrid::max_value() const {
  return values_.empty() ? 0 : *std::max_element(values_.begin(), values_.end());
}

std::int64_t WeightGrid::total() const {
  std::int64_t sum = 0;
  for (int v : values_) sum += v;
  return sum;
}

Tile Tile::spanning(const Cell& a, const Cell& b) {
  return {std::min(a.row, b.row), std::min(a.col, b.col),
          std::max(a.row, b.row), std::max(a.col, b.col)};
}

std::int64_t tile_weight(const WeightGrid& grid, const Tile& t) {
  if (t.r1 < 0 || t.c1 < 0 || t.r1 > t.r2 || t.c1 > t.c2 ||
      t.r2 >= grid.side() || t.c2 >= grid.side()) {
    throw Error(ErrorCode::kOutOfBounds,
                "tile " + std::to_string(t.r1) + " " + std::to_string(t.c1) +
                    " " + std::to_string(t.r2) + " " + std::to_string(t.c2) +
                    " outside a grid of side " + std::to_string(grid.side()));
  }
  std::int64_t sum = 0;
  for (int r = t.r1; r <= t.r2; ++r)
    for (int c = t.c1; c <= t.c2; ++c) sum += grid.at(r, c);
  return sum;
}

ValidationReport validate_tiling(const RtileInstance& instance,
                                 const Tiling& tiles) {
  ValidationReport report;
  const WeightGrid& grid = instance.grid;
  std::vector<int> owner(grid.cell_count(), -1);
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    const Tile& t = tiles[i];
    std::int64_t weight = 0;
    try {
      weight = tile_weight(grid, t);
    } catch (const Error& e) {
      report.add("tile " + std::to_string(i) + " out of bounds: " + e.what());
      continue;
    }
    if (weight > instance.W) {
      report.add("tile " + std::to_string(i) + " has weight " +
                 std::to_string(weight) + " > " + std::to_string(instance.W));
    }
    for (int r = t.r1; r <= t.r2; ++r) {
      for (int c = t.c1; c <= t.c2; ++c) {
        int& o = owner[r * grid.side() + c];
        if (o >= 0) {
          report.add("overlap at " + to_string(Cell{r, c}) + " between tiles " +
                     std::to_string(o) + " and " + std::to_string(i));
        } else {
          o = static_cast<int>(i);
        }
      }
    }
  }
  for (int r = 0; r < grid.side(); ++r)
    for (int c = 0; c < grid.side(); ++c)
      if (owner[r * grid.side() + c] < 0)
        report.add("gap at " + to_string(Cell{r, c}));
  if (static_cast<std::int64_t>(tiles.size()) > instance.p) {
    report.add("tile count " + std::to_string(tiles.size()) + " > budget " +
               std::to_string(instance.p));
  }
  return report;
}

std::string emit_instance(const RtileInstance& instance) {
  std::ostringstream out;
  const WeightGrid& g = instance.grid;
  out << "rtile " << g.side() << ' ' << instance.p << ' ' << instance.W
      << '\n';
  for (int r = 0; r < g.side(); ++r) {
    for (int c = 0; c < g.side(); ++c) {
      if (c > 0) out << ' ';
      out << g.at(r, c);
    }
    out << '\n';
  }
  return out.str();
}

RtileInstance parse_instance(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw Error(ErrorCode::kSyntax, "empty instance");
  auto header = tokens_of(lines[0].second);
  const int header_line = lines[0].first;
  if (header.size() != 4 || header[0] != "rtile") {
    throw Error(ErrorCode::kSyntax,
                "line " + std::to_string(header_line) +
                    ": expected 'rtile <side> <p> <W>'");
  }
  const int side = number_at<int>(header[1], header_line);
  RtileInstance inst;
  inst.p = number_at<std::int64_t>(header[2], header_line);
  inst.W = number_at<int>(header[3], header_line);
  if (side < 1 || inst.p < 1 || inst.W < 1) {
    throw Error(ErrorCode::kSyntax, "line " + std::to_string(header_line) +
                                        ": side, p and W must be positive");
  }
  if (static_cast<int>(lines.size()) != side + 1) {
    throw Error(ErrorCode::kSyntax, "expected " + std::to_string(side) +
                                        " grid rows, found " +
                                        std::to_string(lines.size() - 1));
  }
  inst.grid = WeightGrid(side, 0);
  for (int r = 0; r < side; ++r) {
    auto [number, line] = lines[r + 1];
    auto row = tokens_of(line);
    if (static_cast<int>(row.size()) != side) {
      throw Error(ErrorCode::kSyntax, "line " + std::to_string(number) +
                                          ": expected " +
                                          std::to_string(side) + " weights");
    }
    for (int c = 0; c < side; ++c) {
      int v = number_at<int>(row[c], number);
      if (v < 1) {
        throw Error(ErrorCode::kSyntax, "line " + std::to_string(number) +
                                            ": weights must be positive");
      }
      inst.grid.at(r, c) = v;
    }
  }
  return inst;
}

std::string emit_tiling(const Tiling& tiles) {
  std::ostringstream out;
  for (const Tile& t : tiles) {
    out << t.r1 << ' ' << t.c1 << ' ' << t.r2 << ' ' << t.c2 << '\n';
  }
  return out.str();
}

Tiling parse_tiling(std::string_view text) {
  Tiling tiles;
  for (auto [number, line] : content_lines(text)) {
    auto tok = tokens_of(line);
    if (tok.size() != 4) {
      throw Error(ErrorCode::kSyntax, "line " + std::to_string(number) +
                                          ": expected 'r1 c1 r2 c2'");
    }
    Tile t{number_at<int>(tok[0], number), number_at<int>(tok[1], number),
           number_at<int>(tok[2], number), number_at<int>(tok[3], number)};
    if (t.r1 < 0 || t.c1 < 0 || t.r1 > t.r2 || t.c1 > t.c2) {
      throw Error(ErrorCode::kSyntax,
                  "line " + std::to_string(number) + ": malformed rectangle");
    }
    tiles.push_back(t);
  }
  return tiles;
}

}  // namespace rtile
