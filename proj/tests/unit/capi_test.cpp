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
// Exercises the C interface through the shared library.

#include "rtile/rtile.h"

#include <gtest/gtest.h>

#include <cstdint>
#include <string>
#include <vector>

namespace {

constexpr const char* kSingleClause = "p cnf 3 1\n1 -2 3 0\n";

std::string take(char* s) {
  std::string out = s ? s : "";
  rtile_string_free(s);
  return out;
}

TEST(CApi, NullArgumentsAreReported) {
  EXPECT_EQ(rtile_formula_parse_dimacs(nullptr, nullptr), RTILE_ERR_NULL_ARGUMENT);
  EXPECT_NE(std::string(rtile_last_error()), "");
  EXPECT_STREQ(rtile_status_name(RTILE_OK), "ok");
  EXPECT_STREQ(rtile_status_name(RTILE_ERR_NOT_PLANAR), "NotPlanar");
}

TEST(CApi, ParseErrorsMapToStatus) {
  rtile_formula* f = nullptr;
  EXPECT_EQ(rtile_formula_parse_dimacs("p cnf 3 1\n1 2 0\n", &f),
            RTILE_ERR_CLAUSE_ARITY);
  EXPECT_EQ(f, nullptr);
  EXPECT_EQ(rtile_formula_parse_dimacs("p cnf 3 1\n1 1 2 0\n", &f),
            RTILE_ERR_DUPLICATE_VARIABLE);
  EXPECT_EQ(rtile_formula_parse_dimacs("garbage", &f), RTILE_ERR_SYNTAX);
}

TEST(CApi, ReduceSolveAndTranslateBack) {
  rtile_formula* f = nullptr;
  ASSERT_EQ(rtile_formula_parse_dimacs(kSingleClause, &f), RTILE_OK);
  EXPECT_EQ(rtile_formula_var_count(f), 3);
  EXPECT_EQ(rtile_formula_clause_count(f), 1);
  EXPECT_EQ(take([&] { char* s = nullptr; rtile_formula_emit_dimacs(f, &s); return s; }()),
            kSingleClause);

  rtile_reduction* r = nullptr;
  ASSERT_EQ(rtile_reduce(f, &r), RTILE_OK);
  int ok = 0;
  char* report = nullptr;
  ASSERT_EQ(rtile_reduction_verify(r, &ok, &report), RTILE_OK);
  EXPECT_TRUE(ok) << take(report);
  int64_t parts[4];
  ASSERT_EQ(rtile_reduction_budget(r, parts), RTILE_OK);
  EXPECT_EQ(parts[0] + parts[1] + parts[2], parts[3]);

  rtile_instance* inst = nullptr;
  ASSERT_EQ(rtile_reduction_instance(r, &inst), RTILE_OK);
  EXPECT_EQ(rtile_instance_budget(inst), parts[3]);
  EXPECT_EQ(rtile_instance_bound(inst), 3);

  int tileable = 0;
  rtile_tiling* t = nullptr;
  ASSERT_EQ(rtile_solve_decide(inst, rtile_instance_budget(inst), 3,
                               RTILE_METHOD_AUTO, 0, &tileable, &t),
            RTILE_OK);
  ASSERT_TRUE(tileable);
  ASSERT_NE(t, nullptr);
  EXPECT_LE(static_cast<int64_t>(rtile_tiling_size(t)), parts[3]);

  uint8_t values[3] = {0, 0, 0};
  ASSERT_EQ(rtile_reduction_tiling_to_assignment(r, t, values, 3), RTILE_OK);
  int satisfied = 0;
  ASSERT_EQ(rtile_formula_check(f, values, &satisfied), RTILE_OK);
  EXPECT_TRUE(satisfied);

  // The falsifying assignment has no tiling to offer.
  const uint8_t falsifying[3] = {0, 1, 0};
  rtile_tiling* none = nullptr;
  EXPECT_EQ(rtile_reduction_assignment_to_tiling(r, falsifying, 3, &none),
            RTILE_ERR_UNSATISFIED_CLAUSE);
  EXPECT_EQ(none, nullptr);

  rtile_tiling_free(t);
  rtile_instance_free(inst);
  rtile_reduction_free(r);
  rtile_formula_free(f);
}

TEST(CApi, InstanceAndTilingTextRoundTrip) {
  rtile_formula* f = nullptr;
  ASSERT_EQ(rtile_formula_parse_dimacs(kSingleClause, &f), RTILE_OK);
  rtile_reduction* r = nullptr;
  ASSERT_EQ(rtile_reduce(f, &r), RTILE_OK);
  rtile_instance* inst = nullptr;
  ASSERT_EQ(rtile_reduction_instance(r, &inst), RTILE_OK);

  char* text = nullptr;
  ASSERT_EQ(rtile_instance_emit(inst, &text), RTILE_OK);
  const std::string once = take(text);
  rtile_instance* again = nullptr;
  ASSERT_EQ(rtile_instance_parse(once.c_str(), &again), RTILE_OK);
  ASSERT_EQ(rtile_instance_emit(again, &text), RTILE_OK);
  EXPECT_EQ(take(text), once);

  const uint8_t values[3] = {1, 1, 1};
  rtile_tiling* t = nullptr;
  ASSERT_EQ(rtile_reduction_assignment_to_tiling(r, values, 3, &t), RTILE_OK);
  EXPECT_EQ(static_cast<int64_t>(rtile_tiling_size(t)), rtile_instance_budget(inst));
  int valid = 0;
  char* report = nullptr;
  ASSERT_EQ(rtile_tiling_validate(again, t, rtile_instance_budget(inst), 3, &valid,
                                  &report),
            RTILE_OK);
  EXPECT_TRUE(valid) << take(report);
  // One tile fewer is over budget.
  ASSERT_EQ(rtile_tiling_validate(again, t, rtile_instance_budget(inst) - 1, 3,
                                  &valid, &report),
            RTILE_OK);
  EXPECT_FALSE(valid);
  EXPECT_NE(take(report), "");

  ASSERT_EQ(rtile_tiling_emit(t, &text), RTILE_OK);
  const std::string tiles = take(text);
  rtile_tiling* parsed = nullptr;
  ASSERT_EQ(rtile_tiling_parse(tiles.c_str(), &parsed), RTILE_OK);
  ASSERT_EQ(rtile_tiling_emit(parsed, &text), RTILE_OK);
  EXPECT_EQ(take(text), tiles);
  int bounds[4];
  ASSERT_EQ(rtile_tiling_get(parsed, 0, bounds), RTILE_OK);
  EXPECT_EQ(rtile_tiling_get(parsed, rtile_tiling_size(parsed), bounds),
            RTILE_ERR_OUT_OF_BOUNDS);

  rtile_tiling_free(parsed);
  rtile_tiling_free(t);
  rtile_instance_free(again);
  rtile_instance_free(inst);
  rtile_reduction_free(r);
  rtile_formula_free(f);
}

TEST(CApi, NonPlanarFormulaIsRejected) {
  // K3,3 between clauses and variables.
  rtile_formula* f = nullptr;
  ASSERT_EQ(rtile_formula_parse_dimacs("p cnf 3 3\n1 2 3 0\n-1 2 3 0\n1 -2 3 0\n", &f),
            RTILE_OK);
  int planar = 1;
  ASSERT_EQ(rtile_formula_is_planar(f, &planar), RTILE_OK);
  EXPECT_FALSE(planar);
  rtile_reduction* r = nullptr;
  EXPECT_EQ(rtile_reduce(f, &r), RTILE_ERR_NOT_PLANAR);
  rtile_formula_free(f);
}

TEST(CApi, GadgetCertifiesAndRenders) {
  int passed = 0;
  char* report = nullptr;
  ASSERT_EQ(rtile_certify_gadget(&passed, &report), RTILE_OK);
  EXPECT_TRUE(passed) << take(report);
  rtile_string_free(report);

  rtile_instance* inst = nullptr;
  ASSERT_EQ(rtile_instance_parse("rtile 2 2 3\n1 2\n3 1\n", &inst), RTILE_OK) << rtile_last_error();
  char* svg = nullptr;
  ASSERT_EQ(rtile_render(inst, nullptr, RTILE_RENDER_SVG, &svg), RTILE_OK);
  EXPECT_NE(take(svg).find("<svg"), std::string::npos);
  rtile_instance_free(inst);
}

}  // namespace
