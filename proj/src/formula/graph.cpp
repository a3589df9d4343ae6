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
#include <set>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/property_map/property_map.hpp>

#include "rtile/formula.hpp"

namespace rtile::formula {

std::vector<std::vector<int>> SimpleGraph::adjacency() const {
  std::vector<std::vector<int>> adj(vertex_count);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

SimpleGraph complete_graph(int n) {
  SimpleGraph g{n, {}};
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
  return g;
}

SimpleGraph complete_bipartite(int a, int b) {
  SimpleGraph g{a + b, {}};
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.edges.emplace_back(u, a + v);
  return g;
}

IncidenceGraph incidence_graph(const Cnf& f) {
  IncidenceGraph ig;
  ig.var_count = f.var_count();
  ig.clause_count = f.clause_count();
  ig.graph.vertex_count = f.var_count() + f.clause_count();
  for (int j = 0; j < f.clause_count(); ++j) {
    std::set<int> vars;
    for (const auto& lit : f.clause(j).literals) vars.insert(lit.var);
    for (int v : vars) {
      ig.graph.edges.emplace_back(ig.variable_vertex(v), ig.clause_vertex(j));
    }
  }
  return ig;
}

PlanarityReport is_planar(const SimpleGraph& g) {
  using Graph = boost::adjacency_list<
      boost::vecS, boost::vecS, boost::undirectedS,
      boost::property<boost::vertex_index_t, int>,
      boost::property<boost::edge_index_t, int>>;
  using Edge = boost::graph_traits<Graph>::edge_descriptor;

  Graph bg(g.vertex_count);
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : g.edges) {
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (seen.insert({u, v}).second) boost::add_edge(u, v, bg);
  }
  auto edge_index = boost::get(boost::edge_index, bg);
  int next = 0;
  for (auto [it, end] = boost::edges(bg); it != end; ++it) {
    boost::put(edge_index, *it, next++);
  }

  std::vector<std::vector<Edge>> embedding(boost::num_vertices(bg));
  auto embedding_map = boost::make_iterator_property_map(
      embedding.begin(), boost::get(boost::vertex_index, bg));

  PlanarityReport report;
  report.planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding = embedding_map);
  if (!report.planar) return report;

  report.witness.resize(g.vertex_count);
  for (int v = 0; v < g.vertex_count; ++v) {
    for (const Edge& e : embedding[v]) {
      int s = static_cast<int>(boost::source(e, bg));
      int t = static_cast<int>(boost::target(e, bg));
      report.witness[v].push_back(s == v ? t : s);
    }
  }
  return report;
}

}  // namespace rtile::formula
