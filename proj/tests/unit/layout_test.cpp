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
#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "rtile/error.hpp"
#include "rtile/formula.hpp"
#include "rtile/gadgetry.hpp"
#include "rtile/layout.hpp"

namespace rtile::layout {
namespace {

using formula::Cnf;
using formula::make_clause;
using formula::SimpleGraph;

std::vector<Cell> ring(Cell corner, int h, int w) {
  std::vector<Cell> out;
  for (int c = 0; c < w; ++c) out.push_back(corner + Cell{0, c});
  for (int r = 1; r < h; ++r) out.push_back(corner + Cell{r, w - 1});
  for (int c = w - 2; c >= 0; --c) out.push_back(corner + Cell{h - 1, c});
  for (int r = h - 2; r >= 1; --r) out.push_back(corner + Cell{r, 0});
  return out;
}

bool mentions(const ValidationReport& r, const std::string& needle) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const std::string& v) {
                       return v.find(needle) != std::string::npos;
                     });
}

Layout route(const Cnf& f) {
  const GridEmbedding e = embed_grid(formula::incidence_graph(f).graph);
  return route_layout(f, e, gadgetry::builtin_gadget());
}

void expect_within_bounds(const GridEmbedding& e, int m) {
  EXPECT_LE(e.width, 2 * m - 4);
  EXPECT_LE(e.height, m - 2);
  for (const GridPoint& p : e.coords) {
    EXPECT_GE(p.x, 0);
    EXPECT_GE(p.y, 0);
    EXPECT_LE(p.x, e.width);
    EXPECT_LE(p.y, e.height);
  }
}

TEST(SegmentsTest, CrossingTouchingAndDisjoint) {
  EXPECT_TRUE(segments_intersect({0, 0}, {2, 2}, {0, 2}, {2, 0}));
  EXPECT_TRUE(segments_intersect({0, 0}, {2, 0}, {2, 0}, {3, 5}));
  EXPECT_TRUE(segments_intersect({0, 0}, {4, 0}, {2, 0}, {6, 0}));
  EXPECT_TRUE(segments_intersect({0, 0}, {4, 0}, {2, 0}, {2, 3}));
  EXPECT_FALSE(segments_intersect({0, 0}, {2, 0}, {3, 0}, {5, 0}));
  EXPECT_FALSE(segments_intersect({0, 0}, {2, 0}, {0, 1}, {2, 1}));
  EXPECT_FALSE(segments_intersect({0, 0}, {2, 2}, {3, 0}, {5, 1}));
}

TEST(EmbedTest, Triangle) {
  const SimpleGraph g = formula::complete_graph(3);
  const GridEmbedding e = embed_grid(g);
  ASSERT_EQ(e.coords.size(), 3u);
  EXPECT_TRUE(validate_embedding(g, e).ok());
  expect_within_bounds(e, 3);
  const auto& p = e.coords;
  const long long cross = 1LL * (p[1].x - p[0].x) * (p[2].y - p[0].y) -
                          1LL * (p[1].y - p[0].y) * (p[2].x - p[0].x);
  EXPECT_NE(cross, 0);
}

TEST(EmbedTest, Star) {
  const SimpleGraph g = formula::complete_bipartite(1, 3);
  const GridEmbedding e = embed_grid(g);
  ASSERT_EQ(e.coords.size(), 4u);
  EXPECT_TRUE(validate_embedding(g, e).ok());
  const std::set<GridPoint> distinct(e.coords.begin(), e.coords.end());
  EXPECT_EQ(distinct.size(), 4u);
  expect_within_bounds(e, 4);
}

TEST(EmbedTest, Path) {
  SimpleGraph g;
  g.vertex_count = 4;
  g.edges = {{0, 1}, {1, 2}, {2, 3}};
  const GridEmbedding e = embed_grid(g);
  EXPECT_TRUE(validate_embedding(g, e).ok());
  expect_within_bounds(e, 4);
}

TEST(EmbedTest, RejectsNonPlanar) {
  for (const SimpleGraph& g :
       {formula::complete_graph(5), formula::complete_bipartite(3, 3)}) {
    try {
      embed_grid(g);
      ADD_FAILURE() << "embedded a non-planar graph";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kNotPlanar);
    }
  }
}

TEST(EmbedTest, ValidatorCatchesCrossingDiagonals) {
  const SimpleGraph g = formula::complete_graph(4);
  GridEmbedding e;
  e.coords = {{0, 0}, {2, 0}, {2, 2}, {0, 2}};
  e.width = 2;
  e.height = 2;
  EXPECT_FALSE(validate_embedding(g, e).ok());
  e.coords = {{0, 0}, {4, 0}, {2, 4}, {2, 1}};
  e.width = 4;
  e.height = 4;
  EXPECT_TRUE(validate_embedding(g, e).ok());
  e.coords[3] = {2, 0};  // on the edge between vertices 0 and 1
  EXPECT_FALSE(validate_embedding(g, e).ok());
  e.coords[3] = e.coords[0];
  EXPECT_FALSE(validate_embedding(g, e).ok());
}

TEST(EmbedTest, GeneratedIncidenceGraphsStayPlanarWhenScaled) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Cnf f = formula::gen_planar_3sat(3 + seed % 6, 1 + seed % 6, seed);
    const SimpleGraph g = formula::incidence_graph(f).graph;
    GridEmbedding e = embed_grid(g);
    ASSERT_TRUE(validate_embedding(g, e).ok()) << "seed " << seed;
    expect_within_bounds(e, g.vertex_count);
    for (GridPoint& p : e.coords) p = {p.x * 5, p.y * 5};
    e.width *= 5;
    e.height *= 5;
    EXPECT_TRUE(validate_embedding(g, e).ok()) << "seed " << seed;
  }
}

TEST(RouteTest, SingleClause) {
  const Cnf f(3, {make_clause(1, -2, 3)});
  const Layout l = route(f);
  EXPECT_TRUE(validate_layout(l, &f).ok()) << validate_layout(l, &f).to_string();
  ASSERT_EQ(l.gadgets.size(), 1u);
  ASSERT_EQ(l.loops.size(), 3u);
  ASSERT_EQ(l.ports.size(), 3u);
  std::set<int> vars;
  for (const Port& p : l.ports) {
    vars.insert(p.variable);
    EXPECT_EQ(p.negated, p.variable == 2);
  }
  EXPECT_EQ(vars, (std::set<int>{1, 2, 3}));
  EXPECT_TRUE(l.degenerate_variables.empty());
}

TEST(RouteTest, SharedVariableVisitsBothPorts) {
  const Cnf f(5, {make_clause(1, 2, 3), make_clause(-1, 4, 5)});
  const Layout l = route(f);
  EXPECT_TRUE(validate_layout(l, &f).ok()) << validate_layout(l, &f).to_string();
  EXPECT_FALSE(l.port(1, 0).negated);
  EXPECT_TRUE(l.port(1, 1).negated);
  const auto& loop = l.loops.at(1);
  for (int j : {0, 1}) {
    const Port& p = l.port(1, j);
    EXPECT_NE(std::find(loop.begin(), loop.end(), p.a), loop.end());
    EXPECT_NE(std::find(loop.begin(), loop.end(), p.b), loop.end());
  }
}

TEST(RouteTest, EmptyFormula) {
  const Cnf f(2, {});
  const Layout l = route_layout(f, embed_grid(formula::incidence_graph(f).graph),
                                gadgetry::builtin_gadget());
  EXPECT_EQ(l.grid_side, 1);
  EXPECT_TRUE(l.gadgets.empty());
  EXPECT_TRUE(l.loops.empty());
  EXPECT_EQ(l.degenerate_variables, (std::vector<int>{1, 2}));
  EXPECT_TRUE(validate_layout(l, &f).ok());
}

TEST(RouteTest, UnusedVariableIsReportedDegenerate) {
  const Cnf f(4, {make_clause(1, 2, 3)});
  const Layout l = route(f);
  EXPECT_EQ(l.degenerate_variables, (std::vector<int>{4}));
  EXPECT_FALSE(l.loops.count(4));
  EXPECT_TRUE(validate_layout(l, &f).ok());
}

TEST(RouteTest, EveryLoopHasEvenLength) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Cnf f = formula::gen_planar_3sat(3 + seed % 6, 1 + seed % 6, seed);
    const Layout l = route(f);
    EXPECT_TRUE(validate_layout(l, &f).ok()) << "seed " << seed;
    for (const auto& [var, loop] : l.loops) {
      EXPECT_EQ(loop.size() % 2, 0u) << "seed " << seed << " var " << var;
    }
    for (int j = 0; j < f.clause_count(); ++j) {
      std::set<int> vars;
      for (const Port& p : l.ports)
        if (p.clause == j) vars.insert(p.variable);
      EXPECT_EQ(vars.size(), 3u) << "seed " << seed << " clause " << j;
    }
  }
}

TEST(RouteTest, Deterministic) {
  const Cnf f = formula::gen_planar_3sat(6, 4, 11);
  EXPECT_EQ(dump_layout(route(f)), dump_layout(route(f)));
}

TEST(RouteTest, DumpListsEveryPart) {
  const Cnf f(3, {make_clause(1, 2, -3)});
  const Layout l = route(f);
  const std::string dump = dump_layout(l);
  EXPECT_EQ(dump.rfind("grid " + std::to_string(l.grid_side) + "\n", 0), 0u);
  EXPECT_NE(dump.find("\ngadget 0 anchor "), std::string::npos);
  EXPECT_NE(dump.find("\nloop 3 length "), std::string::npos);
  EXPECT_NE(dump.find("\nport 3 0 "), std::string::npos);
  EXPECT_NE(dump.find(" neg g "), std::string::npos);
}

// Two port-free loops on an empty board; only the injected fault and the
// missing ports should be reported.
Layout two_rings(Cell second) {
  Layout l;
  l.grid_side = 16;
  l.gadget = gadgetry::builtin_gadget();
  l.loops[1] = ring({2, 2}, 4, 4);
  l.loops[2] = ring(second, 4, 4);
  return l;
}

TEST(ValidateLayoutTest, SeparatedLoopsOnlyLackPorts) {
  const ValidationReport r = validate_layout(two_rings({2, 7}));
  EXPECT_EQ(r.violations.size(), 2u) << r.to_string();
  EXPECT_TRUE(mentions(r, "loop 1 visits no port"));
  EXPECT_TRUE(mentions(r, "loop 2 visits no port"));
}

TEST(ValidateLayoutTest, TouchingLoops) {
  EXPECT_TRUE(mentions(validate_layout(two_rings({2, 6})), "loops 1 and 2 touch"));
  EXPECT_TRUE(mentions(validate_layout(two_rings({6, 6})), "loops 1 and 2 touch"));
  EXPECT_TRUE(mentions(validate_layout(two_rings({2, 5})), "share a cell"));
}

TEST(ValidateLayoutTest, SelfTouchingBlock) {
  Layout l = two_rings({2, 8});
  l.loops[2] = ring({10, 10}, 2, 3);  // two rows: a 2x2 block of loop cells
  const ValidationReport r = validate_layout(l);
  EXPECT_TRUE(mentions(r, "loop 2 is self-touching")) << r.to_string();
  EXPECT_FALSE(mentions(r, "loop 1 is self-touching"));
}

TEST(ValidateLayoutTest, OddAndBrokenLoops) {
  Layout l = two_rings({2, 8});
  l.loops[2].pop_back();
  const ValidationReport r = validate_layout(l);
  EXPECT_TRUE(mentions(r, "odd length"));
  EXPECT_TRUE(mentions(r, "breaks between consecutive cells"));
}

TEST(ValidateLayoutTest, RoutedLayoutWithMovedPortFails) {
  const Cnf f(3, {make_clause(1, 2, 3)});
  Layout l = route(f);
  ASSERT_TRUE(validate_layout(l, &f).ok());
  Layout wrong_sign = l;
  wrong_sign.ports[0].negated = !wrong_sign.ports[0].negated;
  EXPECT_FALSE(validate_layout(wrong_sign, &f).ok());
  Layout moved = l;
  std::swap(moved.ports[0].a, moved.ports[0].b);
  EXPECT_FALSE(validate_layout(moved, &f).ok());
}

}  // namespace
}  // namespace rtile::layout
