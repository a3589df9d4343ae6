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
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rtile/layout.hpp"

namespace rtile::layout {
namespace {

using gadgetry::Side;

std::string at(const Cell& c) { return " at " + to_string(c); }

}  // namespace

ValidationReport validate_layout(const Layout& l, const formula::Cnf* f) {
  ValidationReport report;
  const int side = l.grid_side;
  if (side < 1) report.add("grid side must be positive");
  auto inside = [&](const Cell& c) {
    return c.row >= 0 && c.col >= 0 && c.row < side && c.col < side;
  };

  // Loops: simple, non-self-touching, even, pairwise apart.
  std::map<Cell, std::pair<int, int>> loop_cell;  // cell -> (var, index)
  for (const auto& [var, loop] : l.loops) {
    const int n = static_cast<int>(loop.size());
    const std::string name = "loop " + std::to_string(var);
    if (n < 4) {
      report.add(name + " has only " + std::to_string(n) + " cells");
      continue;
    }
    if (n % 2 != 0) {
      report.add(name + " has odd length " + std::to_string(n));
    }
    for (int i = 0; i < n; ++i) {
      const Cell& c = loop[i];
      if (!inside(c)) report.add(name + " leaves the grid" + at(c));
      if (!orthogonally_adjacent(c, loop[(i + 1) % n])) {
        report.add(name + " breaks between consecutive cells" + at(c));
      }
      auto [it, fresh] = loop_cell.emplace(c, std::make_pair(var, i));
      if (!fresh) {
        if (it->second.first == var)
          report.add(name + " repeats a cell" + at(c));
        else
          report.add("loops " + std::to_string(it->second.first) + " and " +
                     std::to_string(var) + " share a cell" + at(c));
      }
    }
  }
  for (const auto& [c, who] : loop_cell) {
    const auto [var, i] = who;
    const int n = static_cast<int>(l.loops.at(var).size());
    for (int dr = -1; dr <= 1; ++dr) {
      for (int dc = -1; dc <= 1; ++dc) {
        if (dr == 0 && dc == 0) continue;
        const Cell nb = c + Cell{dr, dc};
        auto it = loop_cell.find(nb);
        if (it == loop_cell.end()) continue;
        const auto [other, j] = it->second;
        if (other != var) {
          if (var < other)
            report.add("loops " + std::to_string(var) + " and " +
                       std::to_string(other) + " touch" + at(c));
        } else if (dr == 0 || dc == 0) {
          const int gap = (j - i + n) % n;
          if (gap != 1 && gap != n - 1 && i < j) {
            report.add("loop " + std::to_string(var) + " is self-touching" +
                       at(c) + " and " + to_string(nb));
          }
        }
      }
    }
  }

  // Gadgets: placed pattern, inside, apart from each other.
  const auto pattern = l.gadget.footprint();
  std::map<Cell, int> gadget_cell;
  for (std::size_t j = 0; j < l.gadgets.size(); ++j) {
    const GadgetPlacement& gp = l.gadgets[j];
    const std::string name = "gadget " + std::to_string(j);
    if (gp.clause != static_cast<int>(j)) {
      report.add(name + " records clause " + std::to_string(gp.clause));
    }
    std::vector<Cell> expected;
    for (const Cell& c : pattern) expected.push_back(gp.anchor + c);
    if (expected != gp.footprint) {
      report.add(name + " footprint does not match the pattern");
    }
    for (const Cell& c : gp.footprint) {
      if (!inside(c)) report.add(name + " leaves the grid" + at(c));
      if (loop_cell.count(c)) report.add(name + " overlaps a loop" + at(c));
      gadget_cell[c] = static_cast<int>(j);
    }
  }
  for (const auto& [c, j] : gadget_cell) {
    for (int dr = -1; dr <= 1; ++dr)
      for (int dc = -1; dc <= 1; ++dc) {
        auto it = gadget_cell.find(c + Cell{dr, dc});
        if (it != gadget_cell.end() && it->second > j) {
          report.add("gadgets " + std::to_string(j) + " and " +
                     std::to_string(it->second) + " touch" + at(c));
        }
      }
  }

  // Ports: geometry, loop membership, and the cells allowed near gadgets.
  std::map<int, std::vector<const Port*>> by_clause;
  std::map<int, std::set<int>> clauses_of;
  std::map<int, std::set<Cell>> near_ok;  // gadget -> loop cells a and c
  std::map<int, std::set<std::pair<Cell, Cell>>> touch_ok;  // (g, a)
  for (const Port& p : l.ports) {
    const std::string name = "port (" + std::to_string(p.variable) + "," +
                             std::to_string(p.clause) + ")";
    by_clause[p.clause].push_back(&p);
    clauses_of[p.variable].insert(p.clause);
    if (p.clause < 0 || p.clause >= static_cast<int>(l.gadgets.size())) {
      report.add(name + " names a missing gadget");
      continue;
    }
    const GadgetPlacement& gp = l.gadgets[p.clause];
    const Cell step = gadgetry::side_step(p.side);
    if (p.gadget_cell != gp.anchor + l.gadget.port(p.side) ||
        p.a != p.gadget_cell + step || p.b != p.a + step) {
      report.add(name + " is not a straight 3-cell rectangle with its gadget");
    }
    if (gp.port_variables[static_cast<int>(p.side)] != p.variable) {
      report.add(name + " disagrees with the gadget's port order");
    }
    auto loop_it = l.loops.find(p.variable);
    if (loop_it == l.loops.end()) {
      report.add(name + " has no loop");
      continue;
    }
    const auto& loop = loop_it->second;
    const int n = static_cast<int>(loop.size());
    auto ia = loop_cell.find(p.a);
    auto ib = loop_cell.find(p.b);
    if (ia == loop_cell.end() || ib == loop_cell.end() ||
        ia->second.first != p.variable || ib->second.first != p.variable) {
      report.add(name + " loop cells are not on the variable's loop");
      continue;
    }
    const int i = ia->second.second;
    const int k = ib->second.second;
    if ((k - i + n) % n != 1 && (i - k + n) % n != 1) {
      report.add(name + " loop cells are not consecutive");
      continue;
    }
    const Cell c = loop[(2 * i - k + 2 * n) % n];  // a's other neighbour
    near_ok[p.clause].insert(p.a);
    near_ok[p.clause].insert(c);
    touch_ok[p.clause].insert({p.gadget_cell, p.a});
  }
  for (const auto& [g, j] : gadget_cell) {
    for (int dr = -1; dr <= 1; ++dr) {
      for (int dc = -1; dc <= 1; ++dc) {
        const Cell y = g + Cell{dr, dc};
        if (!loop_cell.count(y)) continue;
        if (!near_ok[j].count(y)) {
          report.add("loop " + std::to_string(loop_cell[y].first) +
                     " comes too close to gadget " + std::to_string(j) +
                     at(y));
        } else if ((dr == 0 || dc == 0) && !touch_ok[j].count({g, y})) {
          report.add("loop " + std::to_string(loop_cell[y].first) +
                     " touches gadget " + std::to_string(j) + " outside a port" +
                     at(y));
        }
      }
    }
  }
  for (std::size_t j = 0; j < l.gadgets.size(); ++j) {
    const auto& list = by_clause[static_cast<int>(j)];
    std::set<int> vars;
    for (const Port* p : list) vars.insert(p->variable);
    if (list.size() != 3 || vars.size() != 3) {
      report.add("clause " + std::to_string(j) +
                 " does not have three ports on distinct loops");
    }
  }
  for (const auto& [var, loop] : l.loops) {
    if (!clauses_of.count(var)) {
      report.add("loop " + std::to_string(var) + " visits no port");
    }
  }

  if (f != nullptr) {
    if (static_cast<int>(l.gadgets.size()) != f->clause_count()) {
      report.add("gadget count differs from clause count");
    }
    for (int v = 1; v <= f->var_count(); ++v) {
      const auto occ = f->occurrences(v);
      const std::set<int> expected(occ.begin(), occ.end());
      const bool degenerate =
          std::find(l.degenerate_variables.begin(),
                    l.degenerate_variables.end(),
                    v) != l.degenerate_variables.end();
      if (occ.empty() != degenerate) {
        report.add("variable " + std::to_string(v) +
                   " degenerate flag does not match its occurrences");
      }
      if (!occ.empty() && clauses_of[v] != expected) {
        report.add("variable " + std::to_string(v) +
                   " ports do not match its clauses");
      }
    }
    for (const Port& p : l.ports) {
      if (p.clause < 0 || p.clause >= f->clause_count()) continue;
      const auto& clause = f->clause(p.clause);
      if (!clause.mentions(p.variable)) {
        report.add("port (" + std::to_string(p.variable) + "," +
                   std::to_string(p.clause) + ") names a variable the clause " +
                   "does not mention");
      } else if (clause.literal_of(p.variable).negated != p.negated) {
        report.add("port (" + std::to_string(p.variable) + "," +
                   std::to_string(p.clause) + ") has the wrong sign");
      }
    }
  }
  return report;
}

std::string dump_layout(const Layout& l) {
  std::ostringstream out;
  out << "grid " << l.grid_side << '\n';
  for (const GadgetPlacement& gp : l.gadgets) {
    out << "gadget " << gp.clause << " anchor " << to_string(gp.anchor);
    for (Side s : gadgetry::kSides) {
      out << ' ' << gadgetry::side_name(s) << ' '
          << gp.port_variables[static_cast<int>(s)];
    }
    out << '\n';
  }
  for (const auto& [var, loop] : l.loops) {
    out << "loop " << var << " length " << loop.size() << ':';
    for (const Cell& c : loop) out << ' ' << to_string(c);
    out << '\n';
  }
  for (const Port& p : l.ports) {
    out << "port " << p.variable << ' ' << p.clause << ' '
        << gadgetry::side_name(p.side) << (p.negated ? " neg" : " pos")
        << " g " << to_string(p.gadget_cell) << " a " << to_string(p.a)
        << " b " << to_string(p.b) << '\n';
  }
  for (int v : l.degenerate_variables) out << "degenerate " << v << '\n';
  return out.str();
}

}  // namespace rtile::layout
