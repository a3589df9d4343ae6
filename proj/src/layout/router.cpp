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
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rtile/layout.hpp"

namespace rtile::layout {
namespace {

using gadgetry::GadgetPattern;
using gadgetry::Side;

// Routing happens on a coarse grid of blocks. Each block owned by a variable
// becomes a 3x3 square of loop region; linked blocks are joined by 3-wide
// bridges; a variable's loop is the outer boundary of its region.
constexpr int kBlock = 5;
constexpr int kPad = 2;
constexpr int kMinScale = 2;
constexpr int kMaxScale = 8;
constexpr int kFree = -1;
constexpr int kClauseBlock = -2;

enum Dir { kNorth = 0, kEastDir = 1, kSouthDir = 2, kWestDir = 3 };
constexpr std::array<Cell, 4> kDirStep = {Cell{-1, 0}, Cell{0, 1}, Cell{1, 0},
                                          Cell{0, -1}};
constexpr int opposite(int d) { return (d + 2) % 4; }

struct MacroGrid {
  int rows = 0;
  int cols = 0;
  std::vector<int> owner;
  std::vector<std::uint8_t> links;  // bit d: tree edge towards kDirStep[d]
  std::vector<int> clause;          // clause index on clause blocks
  std::vector<char> port;           // reserved next to a clause block

  void resize(int r, int c) {
    rows = r;
    cols = c;
    owner.assign(r * c, kFree);
    links.assign(r * c, 0);
    clause.assign(r * c, -1);
    port.assign(r * c, 0);
  }
  bool inside(const Cell& c) const {
    return c.row >= 0 && c.col >= 0 && c.row < rows && c.col < cols;
  }
  int at(const Cell& c) const { return c.row * cols + c.col; }
};

// Assigns a clause's variables to the E, S and W ports. The ports lie
// clockwise in that order, so only the three rotations of the variables'
// clockwise order in the drawing keep the routing planar; the rotation that
// best matches the drawn directions wins.
constexpr double kBendCost = 1.0;
constexpr double kDriftCost = 0.5;

std::array<int, 3> assign_sides(std::array<int, 3> vars,
                                std::array<double, 3> angles) {
  static constexpr std::array<double, 3> kSideAngle = {M_PI, 0.0, M_PI / 2};
  std::array<int, 3> order = {0, 1, 2};
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return angles[a] < angles[b]; });
  std::array<int, 3> best{};
  double best_cost = std::numeric_limits<double>::infinity();
  for (int shift = 0; shift < 3; ++shift) {
    // Clockwise E, S, W receive order[shift], order[shift+1], order[shift+2].
    std::array<int, 3> by_side{};
    by_side[static_cast<int>(Side::kEast)] = order[shift % 3];
    by_side[static_cast<int>(Side::kSouth)] = order[(shift + 1) % 3];
    by_side[static_cast<int>(Side::kWest)] = order[(shift + 2) % 3];
    double cost = 0;
    for (int s = 0; s < 3; ++s) {
      double d = std::fabs(angles[by_side[s]] - kSideAngle[s]);
      cost += std::min(d, 2 * M_PI - d);
    }
    if (cost < best_cost - 1e-9) {
      best_cost = cost;
      for (int s = 0; s < 3; ++s) best[s] = vars[by_side[s]];
    }
  }
  return best;
}

double distance_to_segment(double r, double c, double r1, double c1,
                           double r2, double c2) {
  const double dr = r2 - r1;
  const double dc = c2 - c1;
  const double len2 = dr * dr + dc * dc;
  double t = len2 == 0 ? 0 : ((r - r1) * dr + (c - c1) * dc) / len2;
  t = std::clamp(t, 0.0, 1.0);
  const double pr = r1 + t * dr - r;
  const double pc = c1 + t * dc - c;
  return std::sqrt(pr * pr + pc * pc);
}

class Attempt {
 public:
  Attempt(const formula::Cnf& f, const std::vector<Cell>& positions,
          const std::vector<Cell>& drawing, const GadgetPattern& gadget,
          int scale)
      : f_(f), gadget_(gadget), drawing_(drawing) {
    const int m = static_cast<int>(positions.size());
    int max_r = 0;
    int max_c = 0;
    pos_.resize(m);
    for (int v = 0; v < m; ++v) {
      pos_[v] = {kPad + scale * positions[v].row, kPad + scale * positions[v].col};
      max_r = std::max(max_r, pos_[v].row);
      max_c = std::max(max_c, pos_[v].col);
    }
    grid_.resize(max_r + kPad + 2, max_c + kPad + 1);
  }

  // Builds the macro configuration; false on congestion.
  bool route(std::string& why) {
    const int n = f_.var_count();
    const int k = f_.clause_count();
    sides_.assign(k, {});
    for (int j = 0; j < k; ++j) {
      const Cell cp = clause_pos(j);
      const Cell dc = drawing_[f_.var_count() + j];
      std::array<int, 3> vars{};
      std::array<double, 3> angles{};
      for (int i = 0; i < 3; ++i) {
        vars[i] = f_.clause(j).literals[i].var;
        const Cell dv = drawing_[vars[i] - 1];
        angles[i] = std::atan2(dv.row - dc.row, dv.col - dc.col);
        if (angles[i] < 0) angles[i] += 2 * M_PI;
      }
      sides_[j] = assign_sides(vars, angles);
      const int idx = grid_.at(cp);
      if (grid_.owner[idx] != kFree) {
        why = "clause block collision";
        return false;
      }
      grid_.owner[idx] = kClauseBlock;
      grid_.clause[idx] = j;
    }
    for (int j = 0; j < k; ++j) {
      for (Side s : gadgetry::kSides) {
        const Cell pc = port_cell(j, s);
        if (!grid_.inside(pc) || grid_.owner[grid_.at(pc)] != kFree) {
          why = "port block collision";
          return false;
        }
        grid_.owner[grid_.at(pc)] = sides_[j][static_cast<int>(s)];
        grid_.port[grid_.at(pc)] = 1;
      }
    }

    struct Request {
      int length;
      int var;
      int clause;
      Cell from;
    };
    std::vector<Request> requests;
    trees_.assign(n + 1, {});
    for (int v = 1; v <= n; ++v) {
      const auto occ = f_.occurrences(v);
      if (occ.size() < 2) continue;
      const Cell hub = var_pos(v);
      if (grid_.owner[grid_.at(hub)] != kFree) {
        why = "hub collision";
        return false;
      }
      grid_.owner[grid_.at(hub)] = v;
      trees_[v].insert(hub);
      for (int j : occ) {
        const Cell pc = port_cell(j, side_of(j, v));
        requests.push_back({manhattan(pc, hub), v, j, pc});
      }
    }
    std::sort(requests.begin(), requests.end(),
              [](const Request& a, const Request& b) {
                return std::tie(a.length, a.var, a.clause) <
                       std::tie(b.length, b.var, b.clause);
              });
    for (const Request& req : requests) {
      if (!connect(req.var, req.clause, req.from)) {
        why = "no corridor for variable " + std::to_string(req.var);
        return false;
      }
    }
    return true;
  }

  void compact() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int c = grid_.cols - 1; c >= 0; --c) {
        if (removable(c, true)) {
          remove(c, true);
          changed = true;
        }
      }
      for (int r = grid_.rows - 1; r >= 0; --r) {
        if (removable(r, false)) {
          remove(r, false);
          changed = true;
        }
      }
    }
  }

  // Turns the macro configuration into loops, gadgets and ports.
  std::optional<Layout> realize(std::string& why) {
    const GadgetPattern& g = gadget_;
    const Cell wp = g.port(Side::kWest);
    const Cell ep = g.port(Side::kEast);
    const Cell sp = g.port(Side::kSouth);
    if (wp.row != ep.row) {
      why = "gadget W and E ports must share a row";
      return std::nullopt;
    }
    const int fine_rows = grid_.rows * kBlock + kBlock + 2;
    const int fine_cols = grid_.cols * kBlock + kBlock + 2;
    std::vector<int> region(fine_rows * fine_cols, 0);
    std::vector<char> gadget_cell(fine_rows * fine_cols, 0);
    auto paint = [&](int var, int r1, int c1, int r2, int c2) {
      for (int r = r1; r <= r2; ++r)
        for (int c = c1; c <= c2; ++c) region[r * fine_cols + c] = var;
    };

    Layout l;
    l.gadget = g;
    l.gadgets.resize(f_.clause_count());
    for (int r = 0; r < grid_.rows; ++r) {
      for (int c = 0; c < grid_.cols; ++c) {
        const int idx = r * grid_.cols + c;
        const int owner = grid_.owner[idx];
        const int y = kBlock * r + 1;
        const int x = kBlock * c + 1;
        if (owner > 0) {
          paint(owner, y + 1, x + 1, y + 3, x + 3);
          if (grid_.links[idx] & (1 << kEastDir))
            paint(owner, y + 1, x + 4, y + 3, x + 5);
          if (grid_.links[idx] & (1 << kSouthDir))
            paint(owner, y + 4, x + 1, y + 5, x + 3);
        } else if (owner == kClauseBlock) {
          const int j = grid_.clause[idx];
          const Cell anchor{y + 3 - wp.row, x + 1 - sp.col};
          GadgetPlacement& gp = l.gadgets[j];
          gp.clause = j;
          gp.anchor = anchor;
          for (const Cell& cell : g.footprint()) {
            const Cell at = anchor + cell;
            if (at.row < y + 1 || at.row > y + 4 || at.col < x ||
                at.col > x + 4) {
              why = "gadget does not fit a clause block";
              return std::nullopt;
            }
            gp.footprint.push_back(at);
            gadget_cell[at.row * fine_cols + at.col] = 1;
          }
          for (Side s : gadgetry::kSides)
            gp.port_variables[static_cast<int>(s)] =
                sides_[j][static_cast<int>(s)];
          const Cell gw = anchor + wp;
          const Cell ge = anchor + ep;
          const Cell gs = anchor + sp;
          if (gw.col - 1 < x - 1 || ge.col + 1 > x + 5 || gs.row + 1 > y + 5 ||
              gw.row != y + 3 || gs.col != x + 1) {
            why = "gadget ports do not reach the neighbouring blocks";
            return std::nullopt;
          }
          paint(sides_[j][0], y + 1, x - 1, y + 3, gw.col - 1);
          paint(sides_[j][1], y + 1, ge.col + 1, y + 3, x + 5);
          paint(sides_[j][2], gs.row + 1, x + 1, y + 5, x + 3);
        }
      }
    }

    // Each loop is the 8-boundary of its variable's region.
    std::map<int, std::vector<Cell>> ring_cells;
    auto in_region = [&](int var, int r, int c) {
      return r >= 0 && c >= 0 && r < fine_rows && c < fine_cols &&
             region[r * fine_cols + c] == var;
    };
    for (int r = 0; r < fine_rows; ++r) {
      for (int c = 0; c < fine_cols; ++c) {
        const int var = region[r * fine_cols + c];
        if (var == 0) continue;
        if (gadget_cell[r * fine_cols + c]) {
          why = "gadget overlaps a loop region";
          return std::nullopt;
        }
        bool boundary = false;
        for (int dr = -1; dr <= 1 && !boundary; ++dr)
          for (int dc = -1; dc <= 1 && !boundary; ++dc)
            boundary = !in_region(var, r + dr, c + dc);
        if (boundary) ring_cells[var].push_back({r, c});
      }
    }
    for (auto& [var, cells] : ring_cells) {
      auto loop = walk_ring(cells);
      if (!loop) {
        why = "region boundary of variable " + std::to_string(var) +
              " is not a simple cycle";
        return std::nullopt;
      }
      l.loops[var] = std::move(*loop);
    }

    for (int j = 0; j < f_.clause_count(); ++j) {
      for (Side s : gadgetry::kSides) {
        const int var = sides_[j][static_cast<int>(s)];
        Port p;
        p.variable = var;
        p.clause = j;
        p.side = s;
        p.negated = f_.clause(j).literal_of(var).negated;
        p.gadget_cell = l.gadgets[j].anchor + g.port(s);
        p.a = p.gadget_cell + gadgetry::side_step(s);
        p.b = p.a + gadgetry::side_step(s);
        l.ports.push_back(p);
      }
    }
    std::sort(l.ports.begin(), l.ports.end(), [](const Port& a, const Port& b) {
      return std::tie(a.variable, a.clause) < std::tie(b.variable, b.clause);
    });
    for (int v = 1; v <= f_.var_count(); ++v)
      if (f_.occurrences(v).empty()) l.degenerate_variables.push_back(v);
    normalize(l);
    return l;
  }

 private:
  Cell clause_pos(int j) const { return pos_[f_.var_count() + j]; }
  Cell var_pos(int v) const { return pos_[v - 1]; }

  Side side_of(int j, int var) const {
    for (Side s : gadgetry::kSides)
      if (sides_[j][static_cast<int>(s)] == var) return s;
    return Side::kWest;
  }

  Cell port_cell(int j, Side s) const {
    const Cell cp = clause_pos(j);
    switch (s) {
      case Side::kWest:
        return cp + Cell{0, -1};
      case Side::kEast:
        return cp + Cell{0, 1};
      case Side::kSouth:
      default:
        return cp + Cell{1, 0};
    }
  }

  // Shortest corridor from a port block to the variable's tree, preferring
  // blocks close to the drawn edge and few bends.
  bool connect(int var, int clause, const Cell& from) {
    if (trees_[var].count(from)) return true;
    const Cell hub = var_pos(var);
    const Cell cp = clause_pos(clause);
    const int total = grid_.rows * grid_.cols * 5;  // state: block, heading
    std::vector<double> dist(total, std::numeric_limits<double>::infinity());
    std::vector<int> prev(total, -1);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    const int start = grid_.at(from) * 5 + 4;
    dist[start] = 0;
    queue.push({0, start});
    int reached = -1;
    while (!queue.empty()) {
      auto [d, state] = queue.top();
      queue.pop();
      if (d > dist[state]) continue;
      const int idx = state / 5;
      const int heading = state % 5;
      const Cell cell{idx / grid_.cols, idx % grid_.cols};
      if (trees_[var].count(cell)) {
        reached = state;
        break;
      }
      for (int dir = 0; dir < 4; ++dir) {
        const Cell next = cell + kDirStep[dir];
        if (!grid_.inside(next)) continue;
        const int ni = grid_.at(next);
        const int owner = grid_.owner[ni];
        if (owner != kFree && owner != var) continue;
        const double bend = (heading != 4 && heading != dir) ? kBendCost : 0;
        const double step =
            1.0 + bend +
            kDriftCost * distance_to_segment(next.row, next.col, hub.row,
                                             hub.col, cp.row, cp.col);
        const int ns = ni * 5 + dir;
        if (d + step < dist[ns]) {
          dist[ns] = d + step;
          prev[ns] = state;
          queue.push({dist[ns], ns});
        }
      }
    }
    if (reached < 0) return false;
    for (int state = reached; state >= 0; state = prev[state]) {
      const int idx = state / 5;
      const Cell cell{idx / grid_.cols, idx % grid_.cols};
      grid_.owner[idx] = var;
      trees_[var].insert(cell);
      const int p = prev[state];
      if (p < 0) break;
      const int pi = p / 5;
      const int dir = state % 5;
      grid_.links[pi] |= 1 << dir;
      grid_.links[idx] |= 1 << opposite(dir);
    }
    return true;
  }

  // A column (or row) can go when every block in it is empty or a plain
  // straight pass-through across it.
  bool removable(int line, bool column) const {
    const int length = column ? grid_.rows : grid_.cols;
    const std::uint8_t through = column ? ((1 << kEastDir) | (1 << kWestDir))
                                        : ((1 << kNorth) | (1 << kSouthDir));
    for (int i = 0; i < length; ++i) {
      const int idx = column ? i * grid_.cols + line : line * grid_.cols + i;
      const int owner = grid_.owner[idx];
      if (owner == kFree) continue;
      if (owner == kClauseBlock || grid_.port[idx]) return false;
      if (grid_.links[idx] != through) return false;
    }
    return true;
  }

  void remove(int line, bool column) {
    MacroGrid next;
    next.resize(grid_.rows - (column ? 0 : 1), grid_.cols - (column ? 1 : 0));
    for (int r = 0; r < grid_.rows; ++r) {
      if (!column && r == line) continue;
      for (int c = 0; c < grid_.cols; ++c) {
        if (column && c == line) continue;
        const int nr = (!column && r > line) ? r - 1 : r;
        const int nc = (column && c > line) ? c - 1 : c;
        const int from = r * grid_.cols + c;
        const int to = nr * next.cols + nc;
        next.owner[to] = grid_.owner[from];
        next.links[to] = grid_.links[from];
        next.clause[to] = grid_.clause[from];
        next.port[to] = grid_.port[from];
      }
    }
    grid_ = std::move(next);
  }

  static std::optional<std::vector<Cell>> walk_ring(std::vector<Cell> cells) {
    std::sort(cells.begin(), cells.end());
    std::set<Cell> set(cells.begin(), cells.end());
    for (const Cell& c : cells) {
      int degree = 0;
      for (const Cell& s : kOrthogonalSteps) degree += set.count(c + s);
      if (degree != 2) return std::nullopt;
    }
    // The top-left cell has neighbours east and south; leaving east walks
    // the boundary clockwise.
    std::vector<Cell> loop = {cells.front()};
    Cell prev = cells.front();
    Cell cur = cells.front() + Cell{0, 1};
    if (!set.count(cur)) return std::nullopt;
    while (cur != cells.front()) {
      loop.push_back(cur);
      Cell next = cur;
      for (const Cell& s : kOrthogonalSteps) {
        const Cell cand = cur + s;
        if (cand != prev && set.count(cand)) {
          next = cand;
          break;
        }
      }
      prev = cur;
      cur = next;
      if (loop.size() > cells.size()) return std::nullopt;
    }
    if (loop.size() != cells.size()) return std::nullopt;
    return loop;
  }

  // Shifts everything to a one-cell margin and records the square side.
  static void normalize(Layout& l) {
    int min_r = std::numeric_limits<int>::max();
    int min_c = min_r;
    int max_r = 0;
    int max_c = 0;
    auto see = [&](const Cell& c) {
      min_r = std::min(min_r, c.row);
      min_c = std::min(min_c, c.col);
      max_r = std::max(max_r, c.row);
      max_c = std::max(max_c, c.col);
    };
    for (const auto& [v, loop] : l.loops)
      for (const Cell& c : loop) see(c);
    for (const auto& gp : l.gadgets)
      for (const Cell& c : gp.footprint) see(c);
    if (min_r == std::numeric_limits<int>::max()) {
      l.grid_side = 1;
      return;
    }
    const Cell shift{1 - min_r, 1 - min_c};
    for (auto& [v, loop] : l.loops)
      for (Cell& c : loop) c = c + shift;
    for (auto& gp : l.gadgets) {
      gp.anchor = gp.anchor + shift;
      for (Cell& c : gp.footprint) c = c + shift;
    }
    for (Port& p : l.ports) {
      p.gadget_cell = p.gadget_cell + shift;
      p.a = p.a + shift;
      p.b = p.b + shift;
    }
    l.grid_side = std::max(max_r + shift.row, max_c + shift.col) + 2;
  }

  const formula::Cnf& f_;
  const GadgetPattern& gadget_;
  const std::vector<Cell>& drawing_;
  std::vector<Cell> pos_;
  MacroGrid grid_;
  std::vector<std::array<int, 3>> sides_;
  std::vector<std::set<Cell>> trees_;
};

// Replaces each coordinate by its rank among the distinct values; keeps the
// left-right and up-down order of the drawing while shrinking it.
std::vector<Cell> ranked_positions(const GridEmbedding& e) {
  std::vector<int> xs;
  std::vector<int> ys;
  for (const auto& p : e.coords) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  auto rank = [](std::vector<int> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
  };
  const auto rx = rank(xs);
  const auto ry = rank(ys);
  std::vector<Cell> out;
  for (const auto& p : e.coords) {
    const int col = static_cast<int>(
        std::lower_bound(rx.begin(), rx.end(), p.x) - rx.begin());
    const int row = static_cast<int>(ry.end() - std::lower_bound(ry.begin(), ry.end(), p.y)) - 1;
    out.push_back({row, col});
  }
  return out;
}

// The drawing itself, rows counted downward.
std::vector<Cell> drawn_positions(const GridEmbedding& e) {
  std::vector<Cell> out;
  for (const auto& p : e.coords) out.push_back({e.height - p.y, p.x});
  return out;
}

bool planar_positions(const formula::Cnf& f, const std::vector<Cell>& cells) {
  GridEmbedding e;
  for (const Cell& c : cells) {
    e.width = std::max(e.width, c.col);
    e.height = std::max(e.height, c.row);
  }
  for (const Cell& c : cells) e.coords.push_back({c.col, e.height - c.row});
  return validate_embedding(formula::incidence_graph(f).graph, e).ok();
}

}  // namespace

const Port& Layout::port(int variable, int clause) const {
  for (const Port& p : ports)
    if (p.variable == variable && p.clause == clause) return p;
  throw Error(ErrorCode::kInvalidArgument,
              "no port for variable " + std::to_string(variable) +
                  " at clause " + std::to_string(clause));
}

Layout route_layout(const formula::Cnf& f, const GridEmbedding& e,
                    const GadgetPattern& gadget, const LayoutFilter& accept) {
  const int m = f.var_count() + f.clause_count();
  if (static_cast<int>(e.coords.size()) != m) {
    throw Error(ErrorCode::kInvalidArgument,
                "embedding does not match the formula's incidence graph");
  }
  if (f.clause_count() == 0) {
    Layout l;
    l.gadget = gadget;
    for (int v = 1; v <= f.var_count(); ++v) l.degenerate_variables.push_back(v);
    return l;
  }
  const auto drawing = drawn_positions(e);
  std::vector<std::vector<Cell>> guides;
  if (const auto ranked = ranked_positions(e); planar_positions(f, ranked)) {
    guides.push_back(ranked);
  }
  guides.push_back(drawing);
  std::string last = "no attempt made";
  for (int scale = kMinScale; scale <= kMaxScale; ++scale) {
    for (const auto& positions : guides)
    for (bool compact : {true, false}) {
      Attempt attempt(f, positions, drawing, gadget, scale);
      std::string why;
      if (!attempt.route(why)) {
        last = why;
        break;  // compaction cannot help a failed routing
      }
      if (compact) attempt.compact();
      auto l = attempt.realize(why);
      if (!l) {
        last = why;
        continue;
      }
      auto report = validate_layout(*l, &f);
      if (!report.ok()) {
        last = "invalid layout: " + report.violations.front();
        continue;
      }
      if (accept && !accept(*l)) {
        last = "layout rejected by the fill stage";
        continue;
      }
      return std::move(*l);
    }
  }
  throw Error(ErrorCode::kRoutingFailed,
              "routing failed for scales " + std::to_string(kMinScale) + ".." +
                  std::to_string(kMaxScale) + ": " + last);
}

}  // namespace rtile::layout
