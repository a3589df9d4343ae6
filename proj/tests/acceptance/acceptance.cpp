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
// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero when any line fails.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rtile/error.hpp"
#include "rtile/formula.hpp"
#include "rtile/gadgetry.hpp"
#include "rtile/instance.hpp"
#include "rtile/reduction.hpp"
#include "rtile/solver.hpp"

namespace {

using namespace rtile;
using Clock = std::chrono::steady_clock;

int failures = 0;

void report(const std::string& id, bool pass, const std::string& title,
            const std::string& details) {
  std::cout << (pass ? "PASS" : "FAIL") << "  " << id << "  " << title
            << "  " << details << std::endl;
  if (!pass) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fixed(double v, int digits = 2) {
  std::ostringstream s;
  s.precision(digits);
  s << std::fixed << v;
  return s.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Generated planar formulas with at most max_vars variables and max_clauses
// clauses, in a fixed order.
std::vector<formula::Cnf> generated(int count, int max_vars, int max_clauses,
                                    std::uint64_t first_seed) {
  std::vector<formula::Cnf> out;
  for (std::uint64_t seed = first_seed; static_cast<int>(out.size()) < count;
       ++seed) {
    const int v = 3 + static_cast<int>(seed % (max_vars - 2));
    const int k = 1 + static_cast<int>((seed / (max_vars - 2)) % max_clauses);
    try {
      out.push_back(formula::gen_planar_3sat(v, k, seed));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kGenerationFailed) throw;
    }
  }
  return out;
}

const std::vector<std::string> kUnsatFiles = {"unsat_u1.cnf", "unsat_u3.cnf",
                                              "unsat_u1_flipped.cnf"};

// Gadget contract: 3 tiles with no port joined, 2 with any nonempty subset.
void gadget_contract() {
  const auto start = Clock::now();
  const gadgetry::GadgetPattern g = gadgetry::builtin_gadget();
  const gadgetry::CertReport cert = gadgetry::certify_gadget(g);
  bool ok = cert.problems.empty() && cert.minima.size() == 8;
  std::string minima;
  for (const auto& m : cert.minima) {
    const int expected = m.joined == 0 ? 3 : 2;
    ok = ok && m.min_tiles == expected;
    minima += (minima.empty() ? "" : ",") + std::to_string(m.min_tiles);
  }
  const double t = seconds_since(start);
  report("1", ok && t < 5.0, "gadget contract",
         "minima by joined-port mask [" + minima + "] expected [3,2,2,2,2,2,2,2]; " +
             fixed(t, 3) + " s (limit 5 s)");
}

struct Corpus {
  std::vector<formula::Cnf> formulas;
  std::vector<reduction::Reduction> reductions;
};

// Even loops, even changer counts, integral budget, clean verification.
void facts_suite(Corpus& corpus) {
  const auto start = Clock::now();
  int loops = 0, bad = 0, errors = 0;
  std::string first_problem;
  for (const formula::Cnf& f : corpus.formulas) {
    try {
      reduction::Reduction r = reduction::reduce(f);
      const auto& cert = r.certificate;
      for (const auto& [var, rec] : cert.loops) {
        ++loops;
        // Recount from the fill itself rather than the recorded numbers.
        const int length = rec.fill.length();
        const int changers = rec.fill.changer_count();
        if (length % 2 != 0 || changers % 2 != 0) {
          ++bad;
          if (first_problem.empty())
            first_problem = "odd count on loop " + std::to_string(var);
        }
      }
      std::vector<reduction::LoopCount> counts;
      for (const auto& [var, rec] : cert.loops)
        counts.push_back({rec.fill.length(), rec.fill.changer_count()});
      const std::int64_t p =
          reduction::compute_p(counts, f.clause_count(), cert.budget.three_count);
      const ValidationReport v = reduction::verify_reduction(cert, &r.instance);
      if (p != r.instance.p || !v.ok()) {
        ++bad;
        if (first_problem.empty()) first_problem = v.to_string();
      }
      corpus.reductions.push_back(std::move(r));
    } catch (const Error& e) {
      ++errors;
      if (first_problem.empty()) first_problem = e.what();
    }
  }
  const double t = seconds_since(start);
  const bool ok = corpus.formulas.size() >= 100 && bad == 0 && errors == 0 && t < 120;
  report("2", ok, "loop parity, changer parity, integral budget, verification",
         std::to_string(corpus.formulas.size()) + " formulas (<= 8 vars, <= 6 clauses), " +
             std::to_string(loops) + " loops, " + std::to_string(bad) +
             " violations, " + std::to_string(errors) + " exceptions; " +
             fixed(t) + " s (limit 120 s)" +
             (first_problem.empty() ? "" : "; first: " + first_problem));
}

// Every short loop fill has exactly two minimum tilings of (|Z| - P) / 2
// tiles, with a1 + 2 a2 + 3 a3 = |Z| and a3 <= P.
void loop_exactness(const Corpus& corpus) {
  const auto start = Clock::now();
  int checked = 0, bad = 0, longer = 0;
  std::string first_problem;
  for (const auto& r : corpus.reductions) {
    for (const auto& [var, rec] : r.certificate.loops) {
      const int z = rec.fill.length();
      const int p = rec.fill.changer_count();
      if (z > gadgetry::kEnumerateMaxLoop) {
        ++longer;
        continue;
      }
      ++checked;
      const auto tilings = gadgetry::enumerate_min_loop_tilings(rec.fill);
      bool ok = tilings.min_tiles * 2 == z - p && tilings.tilings.size() == 2;
      for (const auto& s : tilings.stats)
        ok = ok && s.a1 + 2 * s.a2 + 3 * s.a3 == z && s.a3 <= p;
      if (!ok) {
        ++bad;
        if (first_problem.empty()) {
          first_problem = "|Z|=" + std::to_string(z) + " P=" + std::to_string(p) +
                          " min " + std::to_string(tilings.min_tiles) + " count " +
                          std::to_string(tilings.tilings.size());
        }
      }
    }
  }
  const double t = seconds_since(start);
  report("3", checked > 0 && bad == 0 && t < 120, "loop minimum tilings",
         std::to_string(checked) + " loops with |Z| <= 40 enumerated (" +
             std::to_string(longer) + " longer skipped), " + std::to_string(bad) +
             " mismatches; " + fixed(t) + " s (limit 120 s)" +
             (first_problem.empty() ? "" : "; first: " + first_problem));
}

struct Agreement {
  int formulas = 0;
  int unsat = 0;
  int agree = 0;
  int errors = 0;
  std::string first_problem;
};

// Satisfiability against tileability within p with weight <= 3, plus the
// extracted assignment when satisfiable.
void compare(const formula::Cnf& f, Agreement& a) {
  ++a.formulas;
  try {
    const auto sat = formula::sat_oracle(f);
    const reduction::Reduction r = reduction::reduce(f);
    const auto tiles = solver::structured_decide(r.instance);
    if (!sat) ++a.unsat;
    bool ok = sat.has_value() == tiles.has_value();
    if (ok && tiles) {
      ok = validate_tiling(r.instance, *tiles).ok() &&
           formula::satisfies(f, reduction::tiling_to_assignment(r.certificate, *tiles));
    }
    if (ok) {
      ++a.agree;
    } else if (a.first_problem.empty()) {
      a.first_problem = "disagreement on " + formula::emit_dimacs(f);
    }
  } catch (const Error& e) {
    ++a.errors;
    if (a.first_problem.empty()) a.first_problem = e.what();
  }
}

std::string describe(const Agreement& a) {
  return std::to_string(a.formulas) + " formulas, " + std::to_string(a.unsat) +
         " unsatisfiable, " + std::to_string(a.agree) + " agree, " +
         std::to_string(a.errors) + " exceptions";
}

void equivalence(const std::string& data_dir) {
  const auto start = Clock::now();
  Agreement desk;
  for (const auto& f : generated(30, 4, 3, 1000)) compare(f, desk);
  compare(formula::parse_dimacs(read_file(data_dir + "/single_clause.cnf")), desk);
  const double t = seconds_since(start);
  // Three clauses rule out at most 3/8 of all assignments, so every formula
  // in this size class is satisfiable and the unsatisfiable quota cannot be
  // met.
  const bool ok = desk.formulas >= 25 && desk.unsat >= 3 &&
                  desk.agree == desk.formulas && desk.errors == 0 && t < 600;
  report("4", ok, "satisfiable iff tileable, <= 4 vars and <= 3 clauses",
         describe(desk) + " (need >= 3 unsatisfiable; a formula with <= 3 "
         "clauses of 3 distinct variables always has a model); " + fixed(t) +
         " s (limit 600 s)" +
         (desk.first_problem.empty() ? "" : "; first: " + desk.first_problem));

  const auto start_ext = Clock::now();
  Agreement extended = desk;
  for (const auto& name : kUnsatFiles)
    compare(formula::parse_dimacs(read_file(data_dir + "/" + name)), extended);
  const double t_ext = seconds_since(start_ext) + t;
  report("4x", extended.unsat >= 3 && extended.agree == extended.formulas &&
                   extended.errors == 0 && t_ext < 600,
         "satisfiable iff tileable, desk set plus smallest unsatisfiable planar formulas",
         describe(extended) + "; " + fixed(t_ext) + " s (limit 600 s)" +
             (extended.first_problem.empty() ? "" : "; first: " + extended.first_problem));
}

// Unsatisfiable formulas need weight >= 4 within p tiles; satisfiable ones
// reach 3.
void gap(const std::string& data_dir) {
  const auto start = Clock::now();
  std::string details;
  bool ok = true;
  for (const auto& name : kUnsatFiles) {
    const formula::Cnf f = formula::parse_dimacs(read_file(data_dir + "/" + name));
    const reduction::Reduction r = reduction::reduce(f);
    // Weights are integers, so no tiling at W = 3 means the optimum is >= 4.
    const auto best = solver::structured_min(r.instance.grid);
    const bool infeasible_at_3 = best.tiles > r.instance.p;
    ok = ok && infeasible_at_3 && !formula::sat_oracle(f);
    details += name + ": p=" + std::to_string(r.instance.p) + ", fewest tiles at W=3 is " +
               std::to_string(best.tiles) + " so optimum >= 4; ";
  }
  const formula::Cnf sat = formula::parse_dimacs(read_file(data_dir + "/single_clause.cnf"));
  const reduction::Reduction r = reduction::reduce(sat);
  const bool reaches_3 = solver::structured_decide(r.instance).has_value() &&
                         r.instance.grid.max_value() == 3;
  ok = ok && reaches_3;
  details += "single_clause.cnf: optimum 3 (a 3-cell rules out W < 3); ratio >= 4/3 = " +
             fixed(4.0 / 3.0, 3) + "; " + fixed(seconds_since(start)) + " s";
  report("5", ok, "optimum gap", details);
}

// structured_decide against exact_decide on random small grids.
void oracle_cross_check() {
  const auto start = Clock::now();
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<int> weight(1, 3);
  int grids = 0, calls = 0, disagreements = 0;
  std::string first_problem;
  for (int i = 0; i < 1200; ++i) {
    const int side = 1 + i % 4;
    WeightGrid g(side, 1);
    for (int r = 0; r < side; ++r)
      for (int c = 0; c < side; ++c) g.at(r, c) = weight(rng);
    ++grids;
    for (std::int64_t p = 1; p <= 16; ++p) {
      ++calls;
      const auto fast = solver::structured_decide({g, p, 3});
      const auto slow = solver::exact_decide(g, p, 3);
      const bool same = fast.has_value() == slow.has_value() &&
                        (!fast || validate_tiling({g, p, 3}, *fast).ok());
      if (!same) {
        ++disagreements;
        if (first_problem.empty())
          first_problem = "grid " + emit_instance({g, p, 3});
      }
    }
  }
  const double t = seconds_since(start);
  report("6", grids >= 1000 && disagreements == 0 && t < 300,
         "structured search agrees with exact search",
         std::to_string(grids) + " random grids of side 1..4, p = 1..16, " +
             std::to_string(calls) + " decisions, " + std::to_string(disagreements) +
             " disagreements; " + fixed(t) + " s (limit 300 s)" +
             (first_problem.empty() ? "" : "; first: " + first_problem));
}

// write -> read -> write is byte-identical for every corpus file type.
void round_trips(const Corpus& corpus, const std::string& data_dir) {
  int dimacs = 0, instances = 0, tilings = 0, bad = 0;
  std::vector<formula::Cnf> formulas = corpus.formulas;
  for (const auto& name : kUnsatFiles)
    formulas.push_back(formula::parse_dimacs(read_file(data_dir + "/" + name)));
  for (const auto& f : formulas) {
    ++dimacs;
    const std::string once = formula::emit_dimacs(f);
    bad += formula::emit_dimacs(formula::parse_dimacs(once)) != once;
  }
  for (const auto& r : corpus.reductions) {
    ++instances;
    const std::string once = emit_instance(r.instance);
    bad += emit_instance(parse_instance(once)) != once;
    if (const auto a = formula::sat_oracle(r.certificate.formula)) {
      ++tilings;
      const std::string t = emit_tiling(reduction::assignment_to_tiling(r.certificate, *a));
      bad += emit_tiling(parse_tiling(t)) != t;
    }
  }
  report("7", bad == 0 && dimacs > 0 && instances > 0 && tilings > 0,
         "format round trips",
         std::to_string(dimacs) + " DIMACS, " + std::to_string(instances) +
             " instance and " + std::to_string(tilings) + " tiling files, " +
             std::to_string(bad) + " mismatches");
}

}  // namespace

int main(int argc, char** argv) {
  const std::string data_dir = argc > 1 ? argv[1] : RTILE_TEST_DATA;
  Corpus corpus;
  corpus.formulas = generated(120, 8, 6, 0);
  auto guarded = [&](const std::string& id, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      report(id, false, "aborted", e.what());
    }
  };
  guarded("1", gadget_contract);
  guarded("2", [&] { facts_suite(corpus); });
  guarded("3", [&] { loop_exactness(corpus); });
  guarded("4", [&] { equivalence(data_dir); });
  guarded("5", [&] { gap(data_dir); });
  guarded("6", oracle_cross_check);
  guarded("7", [&] { round_trips(corpus, data_dir); });
  std::cout << (failures == 0 ? "all criteria pass" :
                std::to_string(failures) + " criterion line(s) fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
