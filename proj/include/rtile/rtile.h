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
/* C interface to the rtile library. Objects are opaque handles released by
 * their *_free function; strings returned through char** are released with
 * rtile_string_free. Every call returns a status; on failure the message is
 * available from rtile_last_error() on the same thread. */

#ifndef RTILE_RTILE_H_
#define RTILE_RTILE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RTILE_API __declspec(dllexport)
#else
#define RTILE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rtile_status {
  RTILE_OK = 0,
  RTILE_ERR_SYNTAX,
  RTILE_ERR_CLAUSE_ARITY,
  RTILE_ERR_DUPLICATE_VARIABLE,
  RTILE_ERR_INDEX_OUT_OF_RANGE,
  RTILE_ERR_TOO_LARGE,
  RTILE_ERR_GENERATION_FAILED,
  RTILE_ERR_NOT_PLANAR,
  RTILE_ERR_ROUTING_FAILED,
  RTILE_ERR_FOOTPRINT_TOO_LARGE,
  RTILE_ERR_NO_PORTS,
  RTILE_ERR_STRAIGHT_RUN_UNAVAILABLE,
  RTILE_ERR_PARITY_UNRESOLVABLE,
  RTILE_ERR_TOO_LONG,
  RTILE_ERR_INVALID_FILL,
  RTILE_ERR_PARITY_VIOLATION,
  RTILE_ERR_UNSATISFIED_CLAUSE,
  RTILE_ERR_INVALID_TILING,
  RTILE_ERR_BUDGET_EXCEEDED,
  RTILE_ERR_INCONSISTENT_MODES,
  RTILE_ERR_OUT_OF_BOUNDS,
  RTILE_ERR_SCALE_EXCEEDED,
  RTILE_ERR_INFEASIBLE_BUDGET,
  RTILE_ERR_PRECONDITION_VIOLATED,
  RTILE_ERR_IO,
  RTILE_ERR_INVALID_ARGUMENT,
  RTILE_ERR_NULL_ARGUMENT,
  RTILE_ERR_INTERNAL
} rtile_status;

typedef enum rtile_method {
  RTILE_METHOD_AUTO = 0,   /* structured when W = 3 and weights are 1..3 */
  RTILE_METHOD_EXACT,      /* general rectangle search */
  RTILE_METHOD_STRUCTURED  /* piece sweep, W = 3 and weights 1..3 only */
} rtile_method;

typedef enum rtile_render_format {
  RTILE_RENDER_ASCII = 0,
  RTILE_RENDER_SVG
} rtile_render_format;

typedef struct rtile_formula rtile_formula;
typedef struct rtile_instance rtile_instance;
typedef struct rtile_tiling rtile_tiling;
typedef struct rtile_reduction rtile_reduction;

RTILE_API const char* rtile_last_error(void);
RTILE_API const char* rtile_status_name(rtile_status status);
RTILE_API void rtile_string_free(char* s);

/* Formulas. Assignments are byte arrays indexed by variable - 1. */
RTILE_API rtile_status rtile_formula_parse_dimacs(const char* text,
                                                  rtile_formula** out);
RTILE_API rtile_status rtile_formula_generate(int vars, int clauses,
                                              uint64_t seed,
                                              rtile_formula** out);
RTILE_API rtile_status rtile_formula_emit_dimacs(const rtile_formula* f,
                                                 char** out);
RTILE_API int rtile_formula_var_count(const rtile_formula* f);
RTILE_API int rtile_formula_clause_count(const rtile_formula* f);
RTILE_API rtile_status rtile_formula_is_planar(const rtile_formula* f,
                                               int* planar);
/* Brute force; values may be NULL. */
RTILE_API rtile_status rtile_formula_solve(const rtile_formula* f,
                                           int* satisfiable, uint8_t* values);
RTILE_API rtile_status rtile_formula_check(const rtile_formula* f,
                                           const uint8_t* values,
                                           int* satisfied);
RTILE_API void rtile_formula_free(rtile_formula* f);

/* Instances: a square weight grid, a tile budget p and a weight bound W. */
RTILE_API rtile_status rtile_instance_parse(const char* text,
                                            rtile_instance** out);
RTILE_API rtile_status rtile_instance_emit(const rtile_instance* inst,
                                           char** out);
RTILE_API int rtile_instance_side(const rtile_instance* inst);
RTILE_API int64_t rtile_instance_budget(const rtile_instance* inst);
RTILE_API int rtile_instance_bound(const rtile_instance* inst);
RTILE_API void rtile_instance_free(rtile_instance* inst);

/* Tilings: tiles are r1 c1 r2 c2, 0-based and inclusive. */
RTILE_API rtile_status rtile_tiling_parse(const char* text,
                                          rtile_tiling** out);
RTILE_API rtile_status rtile_tiling_emit(const rtile_tiling* t, char** out);
RTILE_API size_t rtile_tiling_size(const rtile_tiling* t);
RTILE_API rtile_status rtile_tiling_get(const rtile_tiling* t, size_t index,
                                        int bounds[4]);
/* report receives the violations, one per line (empty when valid). */
RTILE_API rtile_status rtile_tiling_validate(const rtile_instance* inst,
                                             const rtile_tiling* t, int64_t p,
                                             int W, int* valid, char** report);
RTILE_API void rtile_tiling_free(rtile_tiling* t);

/* Solvers. node_limit 0 means the default, or RTILE_SEARCH_LIMIT when set.
 * witness may be NULL; it stays NULL when no tiling exists. */
RTILE_API rtile_status rtile_solve_decide(const rtile_instance* inst,
                                          int64_t p, int W,
                                          rtile_method method,
                                          uint64_t node_limit, int* tileable,
                                          rtile_tiling** witness);
RTILE_API rtile_status rtile_solve_optimize(const rtile_instance* inst,
                                            int64_t p, uint64_t node_limit,
                                            int* W, rtile_tiling** witness);
RTILE_API rtile_status rtile_solve_greedy(const rtile_instance* inst,
                                          int64_t p, int* W,
                                          rtile_tiling** witness);

/* Reduction from a planar 3CNF formula. */
RTILE_API rtile_status rtile_reduce(const rtile_formula* f,
                                    rtile_reduction** out);
RTILE_API rtile_status rtile_reduction_instance(const rtile_reduction* r,
                                                rtile_instance** out);
/* parts receives loop term, clause term, three count and total. */
RTILE_API rtile_status rtile_reduction_budget(const rtile_reduction* r,
                                              int64_t parts[4]);
RTILE_API rtile_status rtile_reduction_certificate(const rtile_reduction* r,
                                                   char** out);
RTILE_API rtile_status rtile_reduction_verify(const rtile_reduction* r,
                                              int* ok, char** report);
RTILE_API rtile_status rtile_reduction_assignment_to_tiling(
    const rtile_reduction* r, const uint8_t* values, int count,
    rtile_tiling** out);
RTILE_API rtile_status rtile_reduction_tiling_to_assignment(
    const rtile_reduction* r, const rtile_tiling* t, uint8_t* values,
    int count);
RTILE_API void rtile_reduction_free(rtile_reduction* r);

/* Built-in clause gadget. */
RTILE_API rtile_status rtile_certify_gadget(int* passed, char** report);

/* t may be NULL. */
RTILE_API rtile_status rtile_render(const rtile_instance* inst,
                                    const rtile_tiling* t,
                                    rtile_render_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* RTILE_RTILE_H_ */
