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
#include <sstream>
#include <string>
#include <vector>

#include "reduction/loop_ports.hpp"
#include "rtile/reduction.hpp"

namespace rtile::reduction {
namespace {

using gadgetry::LoopPort;

std::map<int, LoopRecord> fill_loops(const layout::Layout& l) {
  std::map<int, LoopRecord> out;
  for (const auto& [var, loop] : l.loops) {
    LoopRecord r;
    r.variable = var;
    r.plan = gadgetry::plan_segments(static_cast<int>(loop.size()),
                                     loop_ports(l, var));
    r.fill = gadgetry::fill_loop(loop, r.plan);
    r.length = r.fill.length();
    r.changers = r.fill.changer_count();
    out.emplace(var, std::move(r));
  }
  return out;
}

// Routing candidates whose loops cannot host the fill are skipped in favour
// of the next attempt.
bool fillable(const layout::Layout& l) {
  try {
    fill_loops(l);
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kStraightRunUnavailable ||
        e.code() == ErrorCode::kParityUnresolvable) {
      return false;
    }
    throw;
  }
}

std::int64_t count_threes(const WeightGrid& grid) {
  return std::count(grid.values().begin(), grid.values().end(), 3);
}

}  // namespace

std::vector<LoopPort> loop_ports(const layout::Layout& l, int var) {
  const auto& loop = l.loops.at(var);
  const int n = static_cast<int>(loop.size());
  auto index_of = [&](const Cell& c) {
    return static_cast<int>(std::find(loop.begin(), loop.end(), c) -
                            loop.begin());
  };
  std::vector<LoopPort> out;
  for (const layout::Port& p : l.ports) {
    if (p.variable != var) continue;
    const int ia = index_of(p.a);
    const int ib = index_of(p.b);
    if (ia == n || ib == n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "port (" + std::to_string(var) + "," +
                      std::to_string(p.clause) + ") is off its loop");
    }
    if ((ia + 1) % n == ib) {
      out.push_back({ia, p.negated});
    } else if ((ib + 1) % n == ia) {
      out.push_back({ib, p.negated});
    } else {
      throw Error(ErrorCode::kInvalidArgument,
                  "port (" + std::to_string(var) + "," +
                      std::to_string(p.clause) +
                      ") cells are not consecutive on the loop");
    }
  }
  return out;
}

int port_first(const layout::Layout& l, const layout::Port& p) {
  const auto ports = loop_ports(l, p.variable);
  int k = 0;
  for (const layout::Port& q : l.ports) {
    if (q.variable != p.variable) continue;
    if (q.clause == p.clause) return ports[k].first;
    ++k;
  }
  throw Error(ErrorCode::kInvalidArgument, "port not in layout");
}

Reduction reduce(const formula::Cnf& f) {
  return reduce(f, gadgetry::builtin_gadget());
}

Reduction reduce(const formula::Cnf& f, const gadgetry::GadgetPattern& gadget) {
  const formula::SimpleGraph g = formula::incidence_graph(f).graph;
  if (!formula::is_planar(g).planar) {
    throw Error(ErrorCode::kNotPlanar,
                "clause-variable incidence graph is not planar");
  }
  const layout::GridEmbedding e = layout::embed_grid(g);
  Reduction out;
  ReductionCertificate& cert = out.certificate;
  cert.formula = f;
  cert.layout = layout::route_layout(f, e, gadget, fillable);
  cert.loops = fill_loops(cert.layout);
  cert.clause_count = f.clause_count();

  out.instance.grid = build_grid(cert);
  std::vector<LoopCount> counts;
  for (const auto& [var, r] : cert.loops) counts.push_back({r.length, r.changers});
  const std::int64_t t = count_threes(out.instance.grid);
  out.instance.p = compute_p(counts, cert.clause_count, t);
  out.instance.W = 3;
  for (const LoopCount& c : counts) cert.budget.loop_term += c.length - c.changers;
  cert.budget.loop_term /= 2;
  cert.budget.clause_term = 2 * cert.clause_count;
  cert.budget.three_count = t;
  return out;
}

WeightGrid build_grid(const ReductionCertificate& cert) {
  const layout::Layout& l = cert.layout;
  WeightGrid grid(l.grid_side, 3);
  for (const layout::GadgetPlacement& gp : l.gadgets)
    for (const Cell& c : gp.footprint) grid.at(c) = l.gadget.value(c - gp.anchor);
  for (const auto& [var, r] : cert.loops)
    for (int i = 0; i < r.fill.length(); ++i)
      grid.at(r.fill.cells[i]) = r.fill.values[i];
  return grid;
}

std::int64_t compute_p(const std::vector<LoopCount>& loops, int clause_count,
                       std::int64_t three_count) {
  std::int64_t sum = 0;
  for (const LoopCount& c : loops) sum += c.length - c.changers;
  if (sum % 2 != 0) {
    throw Error(ErrorCode::kParityViolation,
                "sum of |Z| - P over the loops is odd (" +
                    std::to_string(sum) + ")");
  }
  return sum / 2 + 2 * static_cast<std::int64_t>(clause_count) + three_count;
}

std::int64_t compute_p(const ReductionCertificate& cert) {
  std::vector<LoopCount> counts;
  for (const auto& [var, r] : cert.loops) counts.push_back({r.length, r.changers});
  return compute_p(counts, cert.clause_count, cert.budget.three_count);
}

ValidationReport verify_reduction(const ReductionCertificate& cert,
                                  const RtileInstance* instance) {
  ValidationReport report;
  const layout::Layout& l = cert.layout;
  report.merge(layout::validate_layout(l, &cert.formula), "layout: ");

  std::int64_t sum = 0;
  for (const auto& [var, loop] : l.loops) {
    const std::string name = "loop " + std::to_string(var);
    auto it = cert.loops.find(var);
    if (it == cert.loops.end()) {
      report.add(name + " has no fill record");
      continue;
    }
    const LoopRecord& r = it->second;
    sum += r.length - r.changers;
    if (r.length % 2 != 0)
      report.add(name + " has odd length " + std::to_string(r.length));
    if (r.changers % 2 != 0) {
      report.add(name + " has an odd number of phase changers (" +
                 std::to_string(r.changers) + ")");
    }
    if (r.length != r.fill.length()) {
      report.add(name + " records length " + std::to_string(r.length) +
                 " but its fill has " + std::to_string(r.fill.length()) +
                 " cells");
    }
    if (r.changers != r.fill.changer_count()) {
      report.add(name + " records " + std::to_string(r.changers) +
                 " phase changers but its fill has " +
                 std::to_string(r.fill.changer_count()));
    }
    if (r.plan.changers() != r.fill.changer_count()) {
      report.add(name + " plans " + std::to_string(r.plan.changers()) +
                 " phase changers but its fill has " +
                 std::to_string(r.fill.changer_count()));
    }
    if (r.fill.cells != loop) report.add(name + " fill does not follow the loop");
    report.merge(gadgetry::validate_fill(r.fill), name + ": ");
    if (r.fill.cells != loop) continue;
    const int n = r.fill.length();
    for (const LoopPort& p : loop_ports(l, var)) {
      const int block = (p.first + n - 1) % n;
      const auto& blocks = r.fill.port_blocks;
      if (std::find(blocks.begin(), blocks.end(), block) == blocks.end()) {
        report.add(name + " has no port block at loop index " +
                   std::to_string(block));
      }
    }
  }
  for (const auto& [var, r] : cert.loops) {
    if (!l.loops.count(var))
      report.add("fill record for variable " + std::to_string(var) +
                 " has no loop");
  }

  if (sum % 2 != 0) {
    report.add("budget is not an integer: sum of |Z| - P is " +
               std::to_string(sum));
  } else if (cert.budget.loop_term != sum / 2) {
    report.add("budget loop term is " + std::to_string(cert.budget.loop_term) +
               ", recount gives " + std::to_string(sum / 2));
  }
  if (cert.clause_count != cert.formula.clause_count()) {
    report.add("clause count is " + std::to_string(cert.clause_count) +
               ", formula has " + std::to_string(cert.formula.clause_count()));
  }
  if (cert.budget.clause_term != 2 * cert.clause_count) {
    report.add("budget clause term is " +
               std::to_string(cert.budget.clause_term) + ", expected " +
               std::to_string(2 * cert.clause_count));
  }
  WeightGrid grid;
  try {
    grid = build_grid(cert);
  } catch (const std::exception& e) {
    report.add(std::string("grid cannot be rebuilt: ") + e.what());
    return report;
  }
  const std::int64_t t = count_threes(grid);
  if (cert.budget.three_count != t) {
    report.add("budget three count is " +
               std::to_string(cert.budget.three_count) + ", grid has " +
               std::to_string(t));
  }
  if (instance) {
    if (!(instance->grid == grid))
      report.add("instance grid differs from the certificate's grid");
    if (instance->p != cert.budget.total()) {
      report.add("instance budget " + std::to_string(instance->p) +
                 " differs from the certificate's " +
                 std::to_string(cert.budget.total()));
    }
    if (instance->W != 3)
      report.add("instance weight bound is " + std::to_string(instance->W));
  }
  return report;
}

std::string certificate_text(const ReductionCertificate& cert) {
  const layout::Layout& l = cert.layout;
  std::ostringstream out;
  out << "formula vars " << cert.formula.var_count() << " clauses "
      << cert.clause_count << '\n';
  out << "grid " << l.grid_side << '\n';
  out << "budget loops " << cert.budget.loop_term << " clauses "
      << cert.budget.clause_term << " threes " << cert.budget.three_count
      << " total " << cert.budget.total() << '\n';
  for (const auto& [var, r] : cert.loops) {
    out << "loop " << var << " length " << r.length << " changers "
        << r.changers << " odd " << r.plan.odd << " diff " << r.plan.diff
        << " x " << r.plan.x << '\n';
    out << "  ports";
    for (const LoopPort& p : r.plan.ports)
      out << ' ' << p.first << (p.negated ? '-' : '+');
    out << "\n  changers";
    for (int i : r.fill.phase_changers) out << ' ' << i;
    out << "\n  fillers";
    for (int i : r.fill.filler_blocks) out << ' ' << i;
    out << "\n  values ";
    for (int v : r.fill.values) out << v;
    out << '\n';
  }
  for (const layout::GadgetPlacement& gp : l.gadgets) {
    out << "gadget " << gp.clause << " anchor " << to_string(gp.anchor);
    for (gadgetry::Side s : gadgetry::kSides) {
      out << ' ' << gadgetry::side_name(s) << ' '
          << gp.port_variables[static_cast<int>(s)];
    }
    out << '\n';
  }
  for (int v : l.degenerate_variables) out << "degenerate " << v << '\n';
  return out.str();
}

}  // namespace rtile::reduction
