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
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "reduction/loop_ports.hpp"
#include "rtile/reduction.hpp"

namespace rtile::reduction {
namespace {

using gadgetry::LoopFill;

constexpr int kNone = std::numeric_limits<int>::max();

// A run of 1..3 consecutive loop cells that fits in one weight-3 tile.
bool run_fits(const LoopFill& fill, int start, int length) {
  const int n = fill.length();
  int weight = 0;
  for (int k = 0; k < length; ++k) weight += fill.values[(start + k) % n];
  if (weight > 3) return false;
  return length < 3 ||
         straight_triple(fill.cells[start % n], fill.cells[(start + 1) % n],
                         fill.cells[(start + 2) % n]);
}

// Fewest runs covering loop indices start .. start+length-1 (cyclically),
// appended to out; kNone when impossible.
int cover_path(const LoopFill& fill, int start, int length,
               std::vector<gadgetry::LoopRun>* out) {
  std::vector<int> best(length + 1, kNone);
  std::vector<int> step(length + 1, 0);
  best[length] = 0;
  for (int i = length - 1; i >= 0; --i) {
    for (int len = 1; len <= 3 && i + len <= length; ++len) {
      if (best[i + len] == kNone || !run_fits(fill, start + i, len)) continue;
      if (best[i + len] + 1 < best[i]) {
        best[i] = best[i + len] + 1;
        step[i] = len;
      }
    }
  }
  if (best[0] != kNone && out) {
    const int n = fill.length();
    for (int i = 0; i < length; i += step[i])
      out->push_back({(start + i) % n, step[i]});
  }
  return best[0];
}

// Minimum cover of the whole loop by runs, with loop cells first and
// first+1 forced into one domino when `first` is given.
std::vector<gadgetry::LoopRun> cover_loop(const LoopFill& fill,
                                          std::optional<int> first) {
  const int n = fill.length();
  std::vector<gadgetry::LoopRun> runs;
  if (first) {
    runs.push_back({*first, 2});
    if (cover_path(fill, *first + 2, n - 2, &runs) == kNone) runs.clear();
    return runs;
  }
  // Try every run through cell 0 and cover the rest as a path.
  int best = kNone;
  for (int len = 1; len <= 3; ++len) {
    for (int back = 0; back < len; ++back) {
      const int start = (n - back) % n;
      if (!run_fits(fill, start, len)) continue;
      const int rest = cover_path(fill, start + len, n - len, nullptr);
      if (rest != kNone && rest + 1 < best) {
        best = rest + 1;
        runs = {{start, len}};
        cover_path(fill, start + len, n - len, &runs);
      }
    }
  }
  return runs;
}

Tile run_tile(const LoopFill& fill, const gadgetry::LoopRun& run) {
  const int n = fill.length();
  return Tile::spanning(fill.cells[run.start],
                        fill.cells[(run.start + run.length - 1) % n]);
}

std::string clause_text(const formula::Clause& c) {
  std::string s;
  for (const auto& lit : c.literals) {
    if (!s.empty()) s += ' ';
    s += std::to_string(lit.dimacs());
  }
  return s;
}

}  // namespace

Tiling assignment_to_tiling(const ReductionCertificate& cert,
                            const formula::Assignment& a) {
  const formula::Cnf& f = cert.formula;
  const layout::Layout& l = cert.layout;
  if (a.var_count() < f.var_count()) {
    throw Error(ErrorCode::kInvalidArgument,
                "assignment covers " + std::to_string(a.var_count()) +
                    " of " + std::to_string(f.var_count()) + " variables");
  }
  // The first true literal of each clause joins its gadget.
  std::vector<int> joiner(f.clause_count(), 0);
  for (int j = 0; j < f.clause_count(); ++j) {
    for (const auto& lit : f.clause(j).literals) {
      if (lit.holds(a[lit.var])) {
        joiner[j] = lit.var;
        break;
      }
    }
    if (joiner[j] == 0) {
      throw Error(ErrorCode::kUnsatisfiedClause,
                  "clause " + std::to_string(j) + " (" +
                      clause_text(f.clause(j)) + ") has no true literal");
    }
  }

  Tiling tiles;
  for (const auto& [var, r] : cert.loops) {
    const bool value = a[var];
    std::vector<const layout::Port*> good;  // ports whose literal holds
    for (const layout::Port& p : l.ports)
      if (p.variable == var && p.negated != value) good.push_back(&p);
    std::optional<int> first;
    if (!good.empty()) first = port_first(l, *good.front());
    const auto runs = cover_loop(r.fill, first);
    const int target = (r.length - r.changers) / 2;
    if (runs.empty() || static_cast<int>(runs.size()) != target) {
      throw Error(ErrorCode::kInconsistentModes,
                  "loop " + std::to_string(var) + " needs more than " +
                      std::to_string(target) + " tiles in the mode for " +
                      (value ? "true" : "false"));
    }
    std::vector<Tile> loop_tiles;
    for (const auto& run : runs) loop_tiles.push_back(run_tile(r.fill, run));
    for (const layout::Port* p : good) {
      const Tile pair = Tile::spanning(p->a, p->b);
      auto it = std::find(loop_tiles.begin(), loop_tiles.end(), pair);
      if (it == loop_tiles.end()) {
        throw Error(ErrorCode::kInconsistentModes,
                    "loop " + std::to_string(var) + " does not pair port (" +
                        std::to_string(var) + "," + std::to_string(p->clause) +
                        ") in the mode for " + (value ? "true" : "false"));
      }
      if (joiner[p->clause] == var) *it = Tile::spanning(p->gadget_cell, p->b);
    }
    tiles.insert(tiles.end(), loop_tiles.begin(), loop_tiles.end());
  }

  const auto minima = gadgetry::certify_gadget(l.gadget).minima;
  for (const layout::GadgetPlacement& gp : l.gadgets) {
    const int s = static_cast<int>(l.port(joiner[gp.clause], gp.clause).side);
    for (const Tile& t : minima.at(1u << s).witness) {
      tiles.push_back({t.r1 + gp.anchor.row, t.c1 + gp.anchor.col,
                       t.r2 + gp.anchor.row, t.c2 + gp.anchor.col});
    }
  }

  const WeightGrid grid = build_grid(cert);
  for (int row = 0; row < grid.side(); ++row)
    for (int col = 0; col < grid.side(); ++col)
      if (grid.at(row, col) == 3) tiles.push_back(Tile::single({row, col}));
  std::sort(tiles.begin(), tiles.end());
  return tiles;
}

formula::Assignment tiling_to_assignment(const ReductionCertificate& cert,
                                         const Tiling& tiles) {
  const formula::Cnf& f = cert.formula;
  const layout::Layout& l = cert.layout;
  RtileInstance instance{build_grid(cert), static_cast<std::int64_t>(tiles.size()), 3};
  const ValidationReport report = validate_tiling(instance, tiles);
  if (!report.ok()) {
    throw Error(ErrorCode::kInvalidTiling,
                "invalid tiling: " + report.violations.front());
  }
  const std::int64_t p = cert.budget.total();
  if (static_cast<std::int64_t>(tiles.size()) > p) {
    throw Error(ErrorCode::kBudgetExceeded,
                "tiling uses " + std::to_string(tiles.size()) +
                    " tiles, budget is " + std::to_string(p));
  }

  const int side = instance.grid.side();
  std::vector<int> owner(instance.grid.cell_count(), -1);
  for (int i = 0; i < static_cast<int>(tiles.size()); ++i)
    for (int r = tiles[i].r1; r <= tiles[i].r2; ++r)
      for (int c = tiles[i].c1; c <= tiles[i].c2; ++c) owner[r * side + c] = i;
  auto tile_at = [&](const Cell& c) { return owner[c.row * side + c.col]; };

  std::vector<int> joined(f.var_count() + 1, -1);  // -1 none, else value
  for (const layout::Port& port : l.ports) {
    if (tile_at(port.gadget_cell) != tile_at(port.a)) continue;
    const int value = port.negated ? 0 : 1;
    int& seen = joined[port.variable];
    if (seen >= 0 && seen != value) {
      throw Error(ErrorCode::kInconsistentModes,
                  "loop " + std::to_string(port.variable) +
                      " joins gadgets through literals of both signs");
    }
    seen = value;
  }
  formula::Assignment a = formula::Assignment::all(f.var_count(), true);
  for (int v = 1; v <= f.var_count(); ++v)
    if (joined[v] >= 0) a.values[v] = joined[v] == 1;
  for (int j = 0; j < f.clause_count(); ++j) {
    bool holds = false;
    for (const auto& lit : f.clause(j).literals) holds |= lit.holds(a[lit.var]);
    if (!holds) {
      throw Error(ErrorCode::kInconsistentModes,
                  "tiling within budget leaves clause " + std::to_string(j) +
                      " (" + clause_text(f.clause(j)) + ") unjoined");
    }
  }
  return a;
}

}  // namespace rtile::reduction
