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
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rtile/error.hpp"
#include "rtile/gadgetry.hpp"

namespace rtile::gadgetry {

std::string_view side_name(Side side) {
  switch (side) {
    case Side::kWest:
      return "W";
    case Side::kEast:
      return "E";
    case Side::kSouth:
      return "S";
  }
  return "?";
}

Cell side_step(Side side) {
  switch (side) {
    case Side::kWest:
      return {0, -1};
    case Side::kEast:
      return {0, 1};
    case Side::kSouth:
      return {1, 0};
  }
  return {0, 0};
}

std::vector<Cell> GadgetPattern::footprint() const {
  std::vector<Cell> out;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (values[r * cols + c] != 0) out.push_back({r, c});
  return out;
}

bool GadgetPattern::is_port(const Cell& c) const {
  return std::find(ports.begin(), ports.end(), c) != ports.end();
}

// West and east arms turn upwards after a, the south arm turns right; the
// router builds its loops the same way.
DockingArm docking_arm(const GadgetPattern& g, Side side) {
  const Cell p = g.port(side);
  const Cell step = side_step(side);
  DockingArm arm{p + step, p + step + step, {}};
  int r1, r2, c1, c2;
  switch (side) {
    case Side::kWest:
      r1 = p.row - 2, r2 = p.row, c1 = p.col - 4, c2 = p.col - 1;
      break;
    case Side::kEast:
      r1 = p.row - 2, r2 = p.row, c1 = p.col + 1, c2 = p.col + 4;
      break;
    case Side::kSouth:
    default:
      r1 = p.row + 1, r2 = p.row + 4, c1 = p.col, c2 = p.col + 2;
      break;
  }
  for (int r = r1; r <= r2; ++r)
    for (int c = c1; c <= c2; ++c) arm.cells.push_back({r, c});
  return arm;
}

bool dockable(const GadgetPattern& g) {
  const auto cells = g.footprint();
  std::array<DockingArm, 3> arms;
  for (Side s : kSides) arms[static_cast<int>(s)] = docking_arm(g, s);
  for (Side s : kSides) {
    const DockingArm& arm = arms[static_cast<int>(s)];
    const Cell own = g.port(s);
    for (const Cell& y : arm.cells) {
      if (g.has(y)) return false;
      const bool end = y == arm.a || y == arm.b;
      for (const Cell& x : cells) {
        if (orthogonally_adjacent(x, y) && !(x == own && y == arm.a))
          return false;
        if (!end && x != own && chebyshev(x, y) < 2) return false;
      }
    }
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      for (const Cell& y : arms[i].cells)
        for (const Cell& z : arms[j].cells)
          if (chebyshev(y, z) < 2) return false;
  return true;
}

GadgetPattern builtin_gadget() {
  // 1 2 1
  // 1 1 .
  // Ports: west (0,0), east (0,2), south (1,1). Found by synth_gadget.
  GadgetPattern g;
  g.rows = 2;
  g.cols = 3;
  g.values = {1, 2, 1, 1, 1, 0};
  g.ports = {Cell{0, 0}, Cell{0, 2}, Cell{1, 1}};
  return g;
}

namespace {

// Minimum rectangle cover of a cell mask by tiles of weight <= 3, over a
// pattern of at most 16 cells.
class LocalCover {
 public:
  explicit LocalCover(const GadgetPattern& g) : cells_(g.footprint()) {
    const int n = static_cast<int>(cells_.size());
    for (int r1 = 0; r1 < g.rows; ++r1)
      for (int c1 = 0; c1 < g.cols; ++c1)
        for (int r2 = r1; r2 < g.rows; ++r2)
          for (int c2 = c1; c2 < g.cols; ++c2) {
            unsigned mask = 0;
            int weight = 0;
            bool inside = true;
            for (int r = r1; r <= r2 && inside; ++r)
              for (int c = c1; c <= c2 && inside; ++c) {
                if (!g.has({r, c})) {
                  inside = false;
                  break;
                }
                weight += g.value({r, c});
                mask |= 1u << index_of({r, c});
              }
            if (inside && weight <= 3) rects_.push_back({{r1, c1, r2, c2}, mask});
          }
    memo_.assign(std::size_t{1} << n, -1);
    memo_[0] = 0;
  }

  int index_of(const Cell& c) const {
    return static_cast<int>(std::lower_bound(cells_.begin(), cells_.end(), c) -
                            cells_.begin());
  }

  int solve(unsigned mask) {
    if (memo_[mask] >= 0) return memo_[mask];
    const unsigned low = mask & -mask;
    int best = 1 << 20;
    for (const auto& [tile, m] : rects_) {
      if ((m & low) && (m & mask) == m) best = std::min(best, 1 + solve(mask & ~m));
    }
    return memo_[mask] = best;
  }

  Tiling witness(unsigned mask) {
    Tiling out;
    while (mask) {
      const unsigned low = mask & -mask;
      for (const auto& [tile, m] : rects_) {
        if ((m & low) && (m & mask) == m &&
            1 + solve(mask & ~m) == solve(mask)) {
          out.push_back(tile);
          mask &= ~m;
          break;
        }
      }
    }
    return out;
  }

 private:
  std::vector<Cell> cells_;
  std::vector<std::pair<Tile, unsigned>> rects_;
  std::vector<int> memo_;
};

}  // namespace

CertReport certify_gadget(const GadgetPattern& g) {
  CertReport report;
  const auto cells = g.footprint();
  if (static_cast<int>(cells.size()) > kCertifyMaxFootprint) {
    throw Error(ErrorCode::kFootprintTooLarge,
                "gadget has " + std::to_string(cells.size()) +
                    " cells, certification limit is " +
                    std::to_string(kCertifyMaxFootprint));
  }
  if (static_cast<int>(g.values.size()) != g.rows * g.cols) {
    report.problems.push_back("value grid does not match dimensions");
    return report;
  }
  for (const Cell& c : cells) {
    if (g.value(c) < 1 || g.value(c) > 3) {
      report.problems.push_back("value outside {1,2,3} at " + to_string(c));
    }
  }
  std::set<Cell> distinct(g.ports.begin(), g.ports.end());
  if (distinct.size() != 3) report.problems.push_back("ports not distinct");
  for (Side s : kSides) {
    const Cell p = g.port(s);
    const Cell step = side_step(s);
    if (!g.has(p)) {
      report.problems.push_back(std::string(side_name(s)) +
                                " port outside the gadget");
      continue;
    }
    if (g.value(p) != 1) {
      report.problems.push_back(std::string(side_name(s)) +
                                " port value is not 1");
    }
    if (g.has(p + step) || g.has(p + step + step)) {
      report.problems.push_back(std::string(side_name(s)) +
                                " port cannot extend to a 3x1 rectangle");
    }
  }
  if (!report.problems.empty()) return report;

  LocalCover cover(g);
  unsigned all = 0;
  for (const Cell& c : cells) all |= 1u << cover.index_of(c);
  report.passed = true;
  for (unsigned joined = 0; joined < 8; ++joined) {
    unsigned mask = all;
    for (int s = 0; s < 3; ++s)
      if (joined & (1u << s)) mask &= ~(1u << cover.index_of(g.ports[s]));
    SubsetMinimum m{joined, cover.solve(mask), cover.witness(mask)};
    const int expected = joined == 0 ? 3 : 2;
    if (m.min_tiles != expected) report.passed = false;
    report.minima.push_back(std::move(m));
  }
  report.dockable = dockable(g);
  return report;
}

std::string CertReport::to_text(const GadgetPattern& g) const {
  std::ostringstream out;
  out << "gadget " << g.rows << "x" << g.cols << " cells "
      << g.footprint().size() << '\n';
  for (int r = 0; r < g.rows; ++r) {
    for (int c = 0; c < g.cols; ++c) {
      if (c > 0) out << ' ';
      if (g.has({r, c}))
        out << g.value({r, c});
      else
        out << '.';
    }
    out << '\n';
  }
  out << "ports";
  for (Side s : kSides) out << ' ' << side_name(s) << ' ' << to_string(g.port(s));
  out << '\n';
  for (const auto& p : problems) out << "problem " << p << '\n';
  for (const auto& m : minima) {
    out << "joined {";
    bool first = true;
    for (Side s : kSides) {
      if (m.joined & (1u << static_cast<int>(s))) {
        if (!first) out << ',';
        out << side_name(s);
        first = false;
      }
    }
    out << "} min " << m.min_tiles << " expected " << (m.joined == 0 ? 3 : 2)
        << " witness";
    for (const Tile& t : m.witness)
      out << " [" << t.r1 << ' ' << t.c1 << ' ' << t.r2 << ' ' << t.c2 << ']';
    out << '\n';
  }
  out << "dockable " << (dockable ? "yes" : "no") << '\n';
  out << "result " << (passed ? "PASS" : "FAIL") << '\n';
  return out.str();
}

namespace {

using Shape = std::vector<Cell>;

Shape normalized(Shape s) {
  int r0 = s[0].row;
  int c0 = s[0].col;
  for (const Cell& c : s) {
    r0 = std::min(r0, c.row);
    c0 = std::min(c0, c.col);
  }
  for (Cell& c : s) c = {c.row - r0, c.col - c0};
  std::sort(s.begin(), s.end());
  return s;
}

// Fixed polyominoes (translations only), sorted by their cell lists.
std::vector<Shape> grow(const std::vector<Shape>& smaller) {
  std::set<Shape> out;
  for (const Shape& s : smaller) {
    for (const Cell& c : s) {
      for (const Cell& step : kOrthogonalSteps) {
        const Cell n = c + step;
        if (std::find(s.begin(), s.end(), n) != s.end()) continue;
        Shape bigger = s;
        bigger.push_back(n);
        out.insert(normalized(std::move(bigger)));
      }
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace

std::optional<GadgetPattern> synth_gadget(int max_footprint) {
  if (max_footprint > kSynthMaxFootprint) {
    throw Error(ErrorCode::kInvalidArgument,
                "synthesis bound is " + std::to_string(kSynthMaxFootprint));
  }
  std::vector<Shape> shapes = {{Cell{0, 0}}};
  for (int n = 1; n <= max_footprint; ++n) {
    if (n > 1) shapes = grow(shapes);
    if (n < 3) continue;
    for (const Shape& shape : shapes) {
      GadgetPattern g;
      for (const Cell& c : shape) {
        g.rows = std::max(g.rows, c.row + 1);
        g.cols = std::max(g.cols, c.col + 1);
      }
      g.values.assign(g.rows * g.cols, 0);
      for (int w = 0; w < n; ++w)
        for (int e = 0; e < n; ++e)
          for (int s = 0; s < n; ++s) {
            if (w == e || w == s || e == s) continue;
            g.ports = {shape[w], shape[e], shape[s]};
            std::vector<Cell> free;
            for (const Cell& c : shape)
              if (!g.is_port(c)) free.push_back(c);
            for (const Cell& c : g.ports) g.values[c.row * g.cols + c.col] = 1;
            // Non-port values over {1,2,3}, first cell most significant.
            std::vector<int> digits(free.size(), 1);
            for (;;) {
              for (std::size_t i = 0; i < free.size(); ++i)
                g.values[free[i].row * g.cols + free[i].col] = digits[i];
              if (dockable(g)) {
                auto report = certify_gadget(g);
                if (report.passed && report.problems.empty()) return g;
              }
              int i = static_cast<int>(digits.size()) - 1;
              while (i >= 0 && digits[i] == 3) digits[i--] = 1;
              if (i < 0) break;
              ++digits[i];
            }
          }
    }
  }
  return std::nullopt;
}

}  // namespace rtile::gadgetry
