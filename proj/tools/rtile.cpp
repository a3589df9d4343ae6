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
// Command-line front end. Exit codes: 0 success, 1 property refuted
// (untileable, invalid tiling, disagreement, failed certification), 2 usage
// or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rtile/rtile.h"

namespace {

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kError = 2;

// Carries a C API failure or an input problem up to main.
struct Failure {
  std::string message;
};

void check(rtile_status status) {
  if (status != RTILE_OK) {
    throw Failure{std::string(rtile_status_name(status)) + ": " +
                  rtile_last_error()};
  }
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Formula = std::unique_ptr<rtile_formula, Deleter<rtile_formula, rtile_formula_free>>;
using Instance = std::unique_ptr<rtile_instance, Deleter<rtile_instance, rtile_instance_free>>;
using Tiling = std::unique_ptr<rtile_tiling, Deleter<rtile_tiling, rtile_tiling_free>>;
using Reduction = std::unique_ptr<rtile_reduction, Deleter<rtile_reduction, rtile_reduction_free>>;

// Takes ownership of a string returned by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  rtile_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"cannot read " + path};
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Failure{"cannot write " + path};
}

Formula load_formula(const std::string& path) {
  rtile_formula* f = nullptr;
  check(rtile_formula_parse_dimacs(read_file(path).c_str(), &f));
  return Formula(f);
}

Instance load_instance(const std::string& path) {
  rtile_instance* inst = nullptr;
  check(rtile_instance_parse(read_file(path).c_str(), &inst));
  return Instance(inst);
}

Tiling load_tiling(const std::string& path) {
  rtile_tiling* t = nullptr;
  check(rtile_tiling_parse(read_file(path).c_str(), &t));
  return Tiling(t);
}

std::string emit(const rtile_tiling* t) {
  char* text = nullptr;
  check(rtile_tiling_emit(t, &text));
  return take(text);
}

int cmd_reduce(const std::string& cnf, const std::string& out,
               const std::string& cert_path) {
  Formula f = load_formula(cnf);
  rtile_reduction* raw = nullptr;
  check(rtile_reduce(f.get(), &raw));
  Reduction r(raw);
  rtile_instance* inst = nullptr;
  check(rtile_reduction_instance(r.get(), &inst));
  Instance owned(inst);
  char* text = nullptr;
  check(rtile_instance_emit(inst, &text));
  write_file(out, take(text));
  if (!cert_path.empty()) {
    check(rtile_reduction_certificate(r.get(), &text));
    write_file(cert_path, take(text));
  }
  int ok = 0;
  check(rtile_reduction_verify(r.get(), &ok, &text));
  const std::string report = take(text);
  int64_t parts[4];
  check(rtile_reduction_budget(r.get(), parts));
  std::cout << "side " << rtile_instance_side(inst) << '\n'
            << "p = " << parts[0] << " (loops) + " << parts[1]
            << " (clauses) + " << parts[2] << " (threes) = " << parts[3]
            << '\n';
  if (!ok) {
    std::cout << "verification failed:\n" << report;
    return kError;
  }
  std::cout << "verification passed\n";
  return kOk;
}

rtile_method parse_method(const std::string& name) {
  if (name == "exact") return RTILE_METHOD_EXACT;
  if (name == "structured") return RTILE_METHOD_STRUCTURED;
  return RTILE_METHOD_AUTO;
}

int cmd_solve(const std::string& path, const std::vector<int64_t>& decide,
              std::optional<int64_t> optimize, const std::string& method,
              const std::string& out) {
  Instance inst = load_instance(path);
  rtile_tiling* raw = nullptr;
  if (!decide.empty()) {
    int tileable = 0;
    check(rtile_solve_decide(inst.get(), decide[0], static_cast<int>(decide[1]),
                             parse_method(method), 0, &tileable, &raw));
    Tiling witness(raw);
    if (!tileable) {
      std::cout << "untileable with " << decide[0] << " tiles of weight <= "
                << decide[1] << '\n';
      return kRefuted;
    }
    std::cout << "tileable with " << rtile_tiling_size(raw) << " tiles\n";
    if (!out.empty()) write_file(out, emit(raw));
    return kOk;
  }
  int W = 0;
  check(rtile_solve_optimize(inst.get(), *optimize, 0, &W, &raw));
  Tiling witness(raw);
  std::cout << "optimum W = " << W << " with " << rtile_tiling_size(raw)
            << " tiles\n";
  if (!out.empty()) write_file(out, emit(raw));
  return kOk;
}

int cmd_verify(const std::string& inst_path, const std::string& tiling_path,
               std::optional<int64_t> p, std::optional<int> W) {
  Instance inst = load_instance(inst_path);
  Tiling tiles = load_tiling(tiling_path);
  int valid = 0;
  char* report = nullptr;
  check(rtile_tiling_validate(inst.get(), tiles.get(),
                              p.value_or(rtile_instance_budget(inst.get())),
                              W.value_or(rtile_instance_bound(inst.get())),
                              &valid, &report));
  const std::string text = take(report);
  if (!valid) {
    std::cout << "invalid tiling:\n" << text;
    return kRefuted;
  }
  std::cout << "valid tiling with " << rtile_tiling_size(tiles.get())
            << " tiles\n";
  return kOk;
}

int cmd_roundtrip(const std::string& cnf) {
  Formula f = load_formula(cnf);
  const int n = rtile_formula_var_count(f.get());
  std::vector<uint8_t> values(n + 1, 0);
  int sat = 0;
  check(rtile_formula_solve(f.get(), &sat, values.data()));
  rtile_reduction* raw = nullptr;
  check(rtile_reduce(f.get(), &raw));
  Reduction r(raw);
  rtile_instance* inst_raw = nullptr;
  check(rtile_reduction_instance(r.get(), &inst_raw));
  Instance inst(inst_raw);
  const int64_t p = rtile_instance_budget(inst_raw);
  int tileable = 0;
  rtile_tiling* tiling_raw = nullptr;
  check(rtile_solve_decide(inst_raw, p, 3, RTILE_METHOD_STRUCTURED, 0,
                           &tileable, &tiling_raw));
  Tiling witness(tiling_raw);
  std::cout << "formula: " << (sat ? "satisfiable" : "unsatisfiable") << '\n'
            << "instance: side " << rtile_instance_side(inst_raw) << ", "
            << (tileable ? "tileable" : "untileable") << " with p = " << p
            << " tiles of weight <= 3\n";
  if (sat != tileable) {
    std::cout << (sat ? "sat" : "unsat") << " vs "
              << (tileable ? "tileable" : "untileable") << ": disagree\n";
    return kRefuted;
  }
  if (tileable) {
    std::vector<uint8_t> back(n + 1, 0);
    check(rtile_reduction_tiling_to_assignment(r.get(), tiling_raw, back.data(),
                                               n));
    int satisfied = 0;
    check(rtile_formula_check(f.get(), back.data(), &satisfied));
    std::cout << "extracted assignment:";
    for (int v = 0; v < n; ++v) std::cout << ' ' << (back[v] ? v + 1 : -(v + 1));
    std::cout << (satisfied ? " (satisfies)" : " (violates)") << '\n';
    if (!satisfied) return kRefuted;
    std::cout << "sat <=> tileable: agree\n";
  } else {
    std::cout << "unsat <=> untileable: agree\n";
  }
  return kOk;
}

int cmd_certify() {
  int passed = 0;
  char* report = nullptr;
  check(rtile_certify_gadget(&passed, &report));
  std::cout << take(report);
  return passed ? kOk : kRefuted;
}

int cmd_gen(int vars, int clauses, uint64_t seed, const std::string& out) {
  rtile_formula* raw = nullptr;
  check(rtile_formula_generate(vars, clauses, seed, &raw));
  Formula f(raw);
  char* text = nullptr;
  check(rtile_formula_emit_dimacs(raw, &text));
  write_file(out, take(text));
  return kOk;
}

int cmd_render(const std::string& inst_path, const std::string& tiling_path,
               const std::string& format, const std::string& out) {
  Instance inst = load_instance(inst_path);
  Tiling tiles;
  if (!tiling_path.empty()) tiles = load_tiling(tiling_path);
  char* text = nullptr;
  check(rtile_render(inst.get(), tiles.get(),
                     format == "svg" ? RTILE_RENDER_SVG : RTILE_RENDER_ASCII,
                     &text));
  write_file(out, take(text));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduce planar 3SAT to rectangle tiling, solve and verify"};
  app.require_subcommand(1);

  std::string cnf, inst, tiling, out, cert, method = "auto", format = "ascii";
  std::vector<int64_t> decide;
  std::optional<int64_t> optimize, p;
  std::optional<int> W;
  int vars = 0, clauses = 0;
  uint64_t seed = 0;

  auto* reduce = app.add_subcommand("reduce", "Build the tiling instance of a formula");
  reduce->add_option("cnf", cnf, "DIMACS file")->required();
  reduce->add_option("-o,--out", out, "Instance file")->required();
  reduce->add_option("--cert", cert, "Certificate file");

  auto* solve = app.add_subcommand("solve", "Decide or optimize an instance");
  solve->add_option("instance", inst, "Instance file")->required();
  auto* decide_opt = solve->add_option("--decide", decide, "Budget p and bound W")
                         ->expected(2);
  auto* optimize_opt = solve->add_option("--optimize", optimize, "Budget p");
  decide_opt->excludes(optimize_opt);
  solve->add_option("--method", method, "auto, exact or structured")
      ->check(CLI::IsMember({"auto", "exact", "structured"}));
  solve->add_option("--out", out, "Tiling file for the witness");

  auto* verify = app.add_subcommand("verify", "Check a tiling against an instance");
  verify->add_option("instance", inst, "Instance file")->required();
  verify->add_option("tiling", tiling, "Tiling file")->required();
  verify->add_option("--p", p, "Budget (default: the instance's)");
  verify->add_option("--W", W, "Weight bound (default: the instance's)");

  auto* roundtrip = app.add_subcommand(
      "roundtrip", "Compare satisfiability with tileability of the reduction");
  roundtrip->add_option("cnf", cnf, "DIMACS file")->required();

  auto* certify = app.add_subcommand("certify-gadget", "Certify the clause gadget");

  auto* gen = app.add_subcommand("gen", "Generate a random planar 3CNF formula");
  gen->add_option("--vars", vars, "Variables")->required();
  gen->add_option("--clauses", clauses, "Clauses")->required();
  gen->add_option("--seed", seed, "Seed")->required();
  gen->add_option("-o,--out", out, "DIMACS file")->required();

  auto* render = app.add_subcommand("render", "Draw an instance and tiling");
  render->add_option("instance", inst, "Instance file")->required();
  render->add_option("--tiling", tiling, "Tiling file");
  render->add_option("--format", format, "ascii or svg")
      ->check(CLI::IsMember({"ascii", "svg"}));
  render->add_option("-o,--out", out, "Output file (- for stdout)")
      ->default_val("-");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    if (reduce->parsed()) return cmd_reduce(cnf, out, cert);
    if (solve->parsed()) {
      if (decide.empty() && !optimize) {
        std::cerr << "error: solve needs --decide <p> <W> or --optimize <p>\n";
        return kError;
      }
      return cmd_solve(inst, decide, optimize, method, out);
    }
    if (verify->parsed()) return cmd_verify(inst, tiling, p, W);
    if (roundtrip->parsed()) return cmd_roundtrip(cnf);
    if (certify->parsed()) return cmd_certify();
    if (gen->parsed()) return cmd_gen(vars, clauses, seed, out);
    if (render->parsed()) return cmd_render(inst, tiling, format, out);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return kError;
  }
  return kError;
}
