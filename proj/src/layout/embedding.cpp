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
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/chrobak_payne_drawing.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/graph/make_biconnected_planar.hpp>
#include <boost/graph/make_connected.hpp>
#include <boost/graph/make_maximal_planar.hpp>
#include <boost/graph/planar_canonical_ordering.hpp>
#include <boost/property_map/property_map.hpp>

#include "rtile/layout.hpp"

namespace rtile::layout {
namespace {

using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                    boost::property<boost::vertex_index_t, int>,
                                    boost::property<boost::edge_index_t, int>>;
using Edge = boost::graph_traits<Graph>::edge_descriptor;
using Vertex = boost::graph_traits<Graph>::vertex_descriptor;
using Embedding = std::vector<std::vector<Edge>>;

int orientation(GridPoint p, GridPoint q, GridPoint r) {
  const std::int64_t v =
      static_cast<std::int64_t>(q.x - p.x) * (r.y - p.y) -
      static_cast<std::int64_t>(q.y - p.y) * (r.x - p.x);
  return (v > 0) - (v < 0);
}

bool on_segment(GridPoint p, GridPoint q, GridPoint r) {
  return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) &&
         std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
}

void reindex_edges(Graph& g) {
  int next = 0;
  for (auto [it, end] = boost::edges(g); it != end; ++it) {
    boost::put(boost::edge_index, g, *it, next++);
  }
}

Embedding planar_embedding(Graph& g) {
  reindex_edges(g);
  Embedding embedding(boost::num_vertices(g));
  if (!boost::boyer_myrvold_planarity_test(
          boost::boyer_myrvold_params::graph = g,
          boost::boyer_myrvold_params::embedding = &embedding[0])) {
    throw Error(ErrorCode::kNotPlanar, "graph is not planar");
  }
  return embedding;
}

struct Coord {
  std::size_t x;
  std::size_t y;
};

}  // namespace

bool segments_intersect(GridPoint p, GridPoint q, GridPoint r, GridPoint s) {
  const int o1 = orientation(p, q, r);
  const int o2 = orientation(p, q, s);
  const int o3 = orientation(r, s, p);
  const int o4 = orientation(r, s, q);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(p, q, r)) return true;
  if (o2 == 0 && on_segment(p, q, s)) return true;
  if (o3 == 0 && on_segment(r, s, p)) return true;
  if (o4 == 0 && on_segment(r, s, q)) return true;
  return false;
}

ValidationReport validate_embedding(const formula::SimpleGraph& g,
                                    const GridEmbedding& e) {
  ValidationReport report;
  if (static_cast<int>(e.coords.size()) != g.vertex_count) {
    report.add("embedding has " + std::to_string(e.coords.size()) +
               " points for " + std::to_string(g.vertex_count) + " vertices");
    return report;
  }
  std::set<GridPoint> seen;
  for (int v = 0; v < g.vertex_count; ++v) {
    const GridPoint p = e.coords[v];
    if (p.x < 0 || p.y < 0 || p.x > e.width || p.y > e.height) {
      report.add("vertex " + std::to_string(v) + " outside the grid");
    }
    if (!seen.insert(p).second) {
      report.add("vertex " + std::to_string(v) + " shares its point");
    }
  }
  const auto& edges = g.edges;
  auto pt = [&](int v) { return e.coords[v]; };
  for (std::size_t i = 0; i < edges.size(); ++i) {
    // A vertex must not sit on an edge it does not belong to.
    for (int v = 0; v < g.vertex_count; ++v) {
      auto [a, b] = edges[i];
      if (v == a || v == b) continue;
      if (orientation(pt(a), pt(b), pt(v)) == 0 &&
          on_segment(pt(a), pt(b), pt(v))) {
        report.add("vertex " + std::to_string(v) + " lies on edge " +
                   std::to_string(a) + "-" + std::to_string(b));
      }
    }
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      const bool shared = a == c || a == d || b == c || b == d;
      if (shared) {
        // Edges at a common endpoint may only overlap when collinear.
        const int common = (a == c || a == d) ? a : b;
        const int x = common == a ? b : a;
        const int y = (c == common) ? d : c;
        if (orientation(pt(common), pt(x), pt(y)) == 0 &&
            (on_segment(pt(common), pt(x), pt(y)) ||
             on_segment(pt(common), pt(y), pt(x)))) {
          report.add("edges " + std::to_string(a) + "-" + std::to_string(b) +
                     " and " + std::to_string(c) + "-" + std::to_string(d) +
                     " overlap");
        }
        continue;
      }
      if (segments_intersect(pt(a), pt(b), pt(c), pt(d))) {
        report.add("edges " + std::to_string(a) + "-" + std::to_string(b) +
                   " and " + std::to_string(c) + "-" + std::to_string(d) +
                   " cross");
      }
    }
  }
  return report;
}

GridEmbedding embed_grid(const formula::SimpleGraph& input) {
  const int m = input.vertex_count;
  GridEmbedding e;
  if (m < 3) {
    for (int v = 0; v < m; ++v) e.coords.push_back({v, 0});
    e.width = std::max(0, m - 1);
    if (!formula::is_planar(input).planar) {
      throw Error(ErrorCode::kNotPlanar, "graph is not planar");
    }
    return e;
  }

  Graph g(m);
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : input.edges) {
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (seen.insert({u, v}).second) boost::add_edge(u, v, g);
  }
  // Chrobak-Payne needs a maximal planar supergraph; the extra edges only
  // shape the drawing and are discarded.
  planar_embedding(g);
  boost::make_connected(g);
  Embedding embedding = planar_embedding(g);
  boost::make_biconnected_planar(g, &embedding[0]);
  embedding = planar_embedding(g);
  boost::make_maximal_planar(g, &embedding[0]);
  embedding = planar_embedding(g);

  auto embedding_map = boost::make_iterator_property_map(
      embedding.begin(), boost::get(boost::vertex_index, g));
  std::vector<Vertex> ordering;
  boost::planar_canonical_ordering(g, embedding_map,
                                   std::back_inserter(ordering));
  std::vector<Coord> drawing(m);
  boost::chrobak_payne_straight_line_drawing(
      g, embedding_map, ordering.begin(), ordering.end(),
      boost::make_iterator_property_map(drawing.begin(),
                                        boost::get(boost::vertex_index, g)));
  for (int v = 0; v < m; ++v) {
    e.coords.push_back(
        {static_cast<int>(drawing[v].x), static_cast<int>(drawing[v].y)});
    e.width = std::max(e.width, e.coords.back().x);
    e.height = std::max(e.height, e.coords.back().y);
  }
  auto report = validate_embedding(input, e);
  if (!report.ok()) {
    throw Error(ErrorCode::kNotPlanar,
                "drawing check failed: " + report.to_string());
  }
  return e;
}

}  // namespace rtile::layout
