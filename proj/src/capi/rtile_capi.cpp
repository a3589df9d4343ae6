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
#include "rtile/rtile.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>

#include "rtile/error.hpp"
#include "rtile/formula.hpp"
#include "rtile/gadgetry.hpp"
#include "rtile/instance.hpp"
#include "rtile/reduction.hpp"
#include "rtile/render.hpp"
#include "rtile/solver.hpp"

struct rtile_formula {
  rtile::formula::Cnf cnf;
};
struct rtile_instance {
  rtile::RtileInstance inst;
};
struct rtile_tiling {
  rtile::Tiling tiles;
};
struct rtile_reduction {
  rtile::reduction::Reduction r;
};

namespace {

using rtile::Error;
using rtile::ErrorCode;

static_assert(RTILE_ERR_SYNTAX == static_cast<int>(ErrorCode::kSyntax) + 1);
static_assert(RTILE_ERR_INVALID_ARGUMENT ==
              static_cast<int>(ErrorCode::kInvalidArgument) + 1);

thread_local std::string last_error;

rtile_status fail(rtile_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body, turning exceptions into a status and the thread's last error.
template <typename Body>
rtile_status guarded(Body&& body) {
  try {
    last_error.clear();
    body();
    return RTILE_OK;
  } catch (const Error& e) {
    // Status values follow ErrorCode order, offset by RTILE_OK.
    return fail(static_cast<rtile_status>(static_cast<int>(e.code()) + 1),
                e.what());
  } catch (const std::bad_alloc&) {
    return fail(RTILE_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RTILE_ERR_INTERNAL, e.what());
  }
}

#define RTILE_REQUIRE(ptr)                                          \
  do {                                                              \
    if (!(ptr)) return fail(RTILE_ERR_NULL_ARGUMENT, #ptr " is null"); \
  } while (0)

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

rtile::solver::SearchLimits limits_for(std::uint64_t node_limit) {
  if (node_limit == 0) return rtile::solver::SearchLimits::from_environment();
  rtile::solver::SearchLimits limits;
  limits.max_nodes = node_limit;
  return limits;
}

rtile::formula::Assignment to_assignment(const uint8_t* values, int count,
                                         int var_count) {
  if (count < var_count) {
    throw Error(ErrorCode::kInvalidArgument,
                "assignment has " + std::to_string(count) + " values for " +
                    std::to_string(var_count) + " variables");
  }
  auto a = rtile::formula::Assignment::all(var_count, false);
  for (int v = 1; v <= var_count; ++v) a.values[v] = values[v - 1] != 0;
  return a;
}

bool unit_weights(const rtile::WeightGrid& grid) {
  for (int v : grid.values())
    if (v < 1 || v > 3) return false;
  return true;
}

}  // namespace

extern "C" {

const char* rtile_last_error(void) { return last_error.c_str(); }

const char* rtile_status_name(rtile_status status) {
  switch (status) {
    case RTILE_OK: return "ok";
    case RTILE_ERR_NULL_ARGUMENT: return "NullArgument";
    case RTILE_ERR_INTERNAL: return "Internal";
    default: break;
  }
  const int code = static_cast<int>(status) - 1;
  if (code < 0 || code > static_cast<int>(ErrorCode::kInvalidArgument))
    return "Unknown";
  static thread_local std::string name;
  name = std::string(rtile::error_code_name(static_cast<ErrorCode>(code)));
  return name.c_str();
}

void rtile_string_free(char* s) { std::free(s); }

rtile_status rtile_formula_parse_dimacs(const char* text, rtile_formula** out) {
  RTILE_REQUIRE(text);
  RTILE_REQUIRE(out);
  return guarded([&] {
    *out = new rtile_formula{rtile::formula::parse_dimacs(text)};
  });
}

rtile_status rtile_formula_generate(int vars, int clauses, uint64_t seed,
                                    rtile_formula** out) {
  RTILE_REQUIRE(out);
  return guarded([&] {
    *out = new rtile_formula{rtile::formula::gen_planar_3sat(vars, clauses, seed)};
  });
}

rtile_status rtile_formula_emit_dimacs(const rtile_formula* f, char** out) {
  RTILE_REQUIRE(f);
  RTILE_REQUIRE(out);
  return guarded([&] { *out = copy_string(rtile::formula::emit_dimacs(f->cnf)); });
}

int rtile_formula_var_count(const rtile_formula* f) {
  return f ? f->cnf.var_count() : 0;
}

int rtile_formula_clause_count(const rtile_formula* f) {
  return f ? f->cnf.clause_count() : 0;
}

rtile_status rtile_formula_is_planar(const rtile_formula* f, int* planar) {
  RTILE_REQUIRE(f);
  RTILE_REQUIRE(planar);
  return guarded([&] {
    *planar = rtile::formula::is_planar(rtile::formula::incidence_graph(f->cnf).graph)
                  .planar;
  });
}

rtile_status rtile_formula_solve(const rtile_formula* f, int* satisfiable,
                                 uint8_t* values) {
  RTILE_REQUIRE(f);
  RTILE_REQUIRE(satisfiable);
  return guarded([&] {
    const auto a = rtile::formula::sat_oracle(f->cnf);
    *satisfiable = a.has_value();
    if (a && values)
      for (int v = 1; v <= f->cnf.var_count(); ++v) values[v - 1] = (*a)[v];
  });
}

rtile_status rtile_formula_check(const rtile_formula* f, const uint8_t* values,
                                 int* satisfied) {
  RTILE_REQUIRE(f);
  RTILE_REQUIRE(values || f->cnf.var_count() == 0);
  RTILE_REQUIRE(satisfied);
  return guarded([&] {
    const int n = f->cnf.var_count();
    *satisfied = rtile::formula::satisfies(f->cnf, to_assignment(values, n, n));
  });
}

void rtile_formula_free(rtile_formula* f) { delete f; }

rtile_status rtile_instance_parse(const char* text, rtile_instance** out) {
  RTILE_REQUIRE(text);
  RTILE_REQUIRE(out);
  return guarded([&] { *out = new rtile_instance{rtile::parse_instance(text)}; });
}

rtile_status rtile_instance_emit(const rtile_instance* inst, char** out) {
  RTILE_REQUIRE(inst);
  RTILE_REQUIRE(out);
  return guarded([&] { *out = copy_string(rtile::emit_instance(inst->inst)); });
}

int rtile_instance_side(const rtile_instance* inst) {
  return inst ? inst->inst.grid.side() : 0;
}

int64_t rtile_instance_budget(const rtile_instance* inst) {
  return inst ? inst->inst.p : 0;
}

int rtile_instance_bound(const rtile_instance* inst) {
  return inst ? inst->inst.W : 0;
}

void rtile_instance_free(rtile_instance* inst) { delete inst; }

rtile_status rtile_tiling_parse(const char* text, rtile_tiling** out) {
  RTILE_REQUIRE(text);
  RTILE_REQUIRE(out);
  return guarded([&] { *out = new rtile_tiling{rtile::parse_tiling(text)}; });
}

rtile_status rtile_tiling_emit(const rtile_tiling* t, char** out) {
  RTILE_REQUIRE(t);
  RTILE_REQUIRE(out);
  return guarded([&] { *out = copy_string(rtile::emit_tiling(t->tiles)); });
}

size_t rtile_tiling_size(const rtile_tiling* t) {
  return t ? t->tiles.size() : 0;
}

rtile_status rtile_tiling_get(const rtile_tiling* t, size_t index,
                              int bounds[4]) {
  RTILE_REQUIRE(t);
  RTILE_REQUIRE(bounds);
  if (index >= t->tiles.size())
    return fail(RTILE_ERR_OUT_OF_BOUNDS, "tile index out of range");
  const rtile::Tile& tile = t->tiles[index];
  bounds[0] = tile.r1;
  bounds[1] = tile.c1;
  bounds[2] = tile.r2;
  bounds[3] = tile.c2;
  last_error.clear();
  return RTILE_OK;
}

rtile_status rtile_tiling_validate(const rtile_instance* inst,
                                   const rtile_tiling* t, int64_t p, int W,
                                   int* valid, char** report) {
  RTILE_REQUIRE(inst);
  RTILE_REQUIRE(t);
  RTILE_REQUIRE(valid);
  return guarded([&] {
    const rtile::RtileInstance checked{inst->inst.grid, p, W};
    const auto r = rtile::validate_tiling(checked, t->tiles);
    *valid = r.ok();
    if (report) *report = copy_string(r.to_string());
  });
}

void rtile_tiling_free(rtile_tiling* t) { delete t; }

rtile_status rtile_solve_decide(const rtile_instance* inst, int64_t p, int W,
                                rtile_method method, uint64_t node_limit,
                                int* tileable, rtile_tiling** witness) {
  RTILE_REQUIRE(inst);
  RTILE_REQUIRE(tileable);
  return guarded([&] {
    const auto limits = limits_for(node_limit);
    const rtile::WeightGrid& grid = inst->inst.grid;
    const bool structured =
        method == RTILE_METHOD_STRUCTURED ||
        (method == RTILE_METHOD_AUTO && W == 3 && unit_weights(grid));
    std::optional<rtile::Tiling> found =
        structured ? rtile::solver::structured_decide({grid, p, W}, limits)
                   : rtile::solver::exact_decide(grid, p, W, limits);
    *tileable = found.has_value();
    if (witness) *witness = found ? new rtile_tiling{std::move(*found)} : nullptr;
  });
}

rtile_status rtile_solve_optimize(const rtile_instance* inst, int64_t p,
                                  uint64_t node_limit, int* W,
                                  rtile_tiling** witness) {
  RTILE_REQUIRE(inst);
  RTILE_REQUIRE(W);
  return guarded([&] {
    auto best = rtile::solver::exact_optimize(inst->inst.grid, p,
                                              limits_for(node_limit));
    *W = best.W;
    if (witness) *witness = new rtile_tiling{std::move(best.tiling)};
  });
}

rtile_status rtile_solve_greedy(const rtile_instance* inst, int64_t p, int* W,
                                rtile_tiling** witness) {
  RTILE_REQUIRE(inst);
  RTILE_REQUIRE(W);
  return guarded([&] {
    auto best = rtile::solver::approx_greedy(inst->inst.grid, p);
    *W = best.W;
    if (witness) *witness = new rtile_tiling{std::move(best.tiling)};
  });
}

rtile_status rtile_reduce(const rtile_formula* f, rtile_reduction** out) {
  RTILE_REQUIRE(f);
  RTILE_REQUIRE(out);
  return guarded([&] {
    *out = new rtile_reduction{rtile::reduction::reduce(f->cnf)};
  });
}

rtile_status rtile_reduction_instance(const rtile_reduction* r,
                                      rtile_instance** out) {
  RTILE_REQUIRE(r);
  RTILE_REQUIRE(out);
  return guarded([&] { *out = new rtile_instance{r->r.instance}; });
}

rtile_status rtile_reduction_budget(const rtile_reduction* r,
                                    int64_t parts[4]) {
  RTILE_REQUIRE(r);
  RTILE_REQUIRE(parts);
  const auto& b = r->r.certificate.budget;
  parts[0] = b.loop_term;
  parts[1] = b.clause_term;
  parts[2] = b.three_count;
  parts[3] = b.total();
  last_error.clear();
  return RTILE_OK;
}

rtile_status rtile_reduction_certificate(const rtile_reduction* r, char** out) {
  RTILE_REQUIRE(r);
  RTILE_REQUIRE(out);
  return guarded([&] {
    *out = copy_string(rtile::reduction::certificate_text(r->r.certificate));
  });
}

rtile_status rtile_reduction_verify(const rtile_reduction* r, int* ok,
                                    char** report) {
  RTILE_REQUIRE(r);
  RTILE_REQUIRE(ok);
  return guarded([&] {
    const auto v =
        rtile::reduction::verify_reduction(r->r.certificate, &r->r.instance);
    *ok = v.ok();
    if (report) *report = copy_string(v.to_string());
  });
}

rtile_status rtile_reduction_assignment_to_tiling(const rtile_reduction* r,
                                                  const uint8_t* values,
                                                  int count,
                                                  rtile_tiling** out) {
  RTILE_REQUIRE(r);
  RTILE_REQUIRE(values || count == 0);
  RTILE_REQUIRE(out);
  return guarded([&] {
    const auto& cert = r->r.certificate;
    const auto a = to_assignment(values, count, cert.formula.var_count());
    *out = new rtile_tiling{rtile::reduction::assignment_to_tiling(cert, a)};
  });
}

rtile_status rtile_reduction_tiling_to_assignment(const rtile_reduction* r,
                                                  const rtile_tiling* t,
                                                  uint8_t* values, int count) {
  RTILE_REQUIRE(r);
  RTILE_REQUIRE(t);
  const int n = r->r.certificate.formula.var_count();
  RTILE_REQUIRE(values || n == 0);
  if (count < n) {
    return fail(RTILE_ERR_INVALID_ARGUMENT,
                "assignment buffer holds " + std::to_string(count) +
                    " values for " + std::to_string(n) + " variables");
  }
  return guarded([&] {
    const auto a =
        rtile::reduction::tiling_to_assignment(r->r.certificate, t->tiles);
    for (int v = 1; v <= n; ++v) values[v - 1] = a[v];
  });
}

void rtile_reduction_free(rtile_reduction* r) { delete r; }

rtile_status rtile_certify_gadget(int* passed, char** report) {
  RTILE_REQUIRE(passed);
  return guarded([&] {
    const auto g = rtile::gadgetry::builtin_gadget();
    const auto cert = rtile::gadgetry::certify_gadget(g);
    *passed = cert.passed;
    if (report) *report = copy_string(cert.to_text(g));
  });
}

rtile_status rtile_render(const rtile_instance* inst, const rtile_tiling* t,
                          rtile_render_format format, char** out) {
  RTILE_REQUIRE(inst);
  RTILE_REQUIRE(out);
  return guarded([&] {
    const rtile::Tiling* tiles = t ? &t->tiles : nullptr;
    switch (format) {
      case RTILE_RENDER_ASCII:
        *out = copy_string(rtile::render::ascii(inst->inst.grid, tiles));
        return;
      case RTILE_RENDER_SVG:
        *out = copy_string(rtile::render::svg(inst->inst.grid, tiles));
        return;
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown render format");
  });
}

}  // extern "C"
