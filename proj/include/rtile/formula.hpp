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

#ifndef RTILE_FORMULA_HPP_
#define RTILE_FORMULA_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rtile::formula {

struct Literal {
  int var = 0;  // 1-based variable index
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;

  // True when the literal holds under the given variable value.
  bool holds(bool value) const { return value != negated; }
  int dimacs() const { return negated ? -var : var; }
};

struct Clause {
  std::array<Literal, 3> literals;

  friend bool operator==(const Clause&, const Clause&) = default;

  bool mentions(int var) const;
  // Literal over `var`; the clause must mention it.
  const Literal& literal_of(int var) const;
};

// A 3CNF formula. Every clause holds three literals over three pairwise
// distinct variables in [1, var_count].
class Cnf {
 public:
  Cnf() = default;
  // Throws Error(kIndexOutOfRange / kDuplicateVariable) on invalid input.
  Cnf(int var_count, std::vector<Clause> clauses);

  int var_count() const { return var_count_; }
  int clause_count() const { return static_cast<int>(clauses_.size()); }
  const std::vector<Clause>& clauses() const { return clauses_; }
  const Clause& clause(int index) const { return clauses_.at(index); }

  // Clause indices mentioning `var`, ascending.
  std::vector<int> occurrences(int var) const;

  friend bool operator==(const Cnf&, const Cnf&) = default;

 private:
  int var_count_ = 0;
  std::vector<Clause> clauses_;
};

Clause make_clause(int a, int b, int c);

// values[v] is the value of variable v; index 0 is unused.
struct Assignment {
  std::vector<bool> values;

  static Assignment all(int var_count, bool value);
  bool operator[](int var) const { return values.at(var); }
  int var_count() const { return static_cast<int>(values.size()) - 1; }
};

Cnf parse_dimacs(std::string_view text);
std::string emit_dimacs(const Cnf& f);

// Plain clause-by-clause check; deliberately naive so it can serve as the
// verifier for everything that produces assignments.
bool satisfies(const Cnf& f, const Assignment& a);

inline constexpr int kSatOracleMaxVars = 24;

// Lexicographically first satisfying assignment (x1 most significant,
// false < true), or nullopt. Throws kTooLarge above kSatOracleMaxVars.
std::optional<Assignment> sat_oracle(const Cnf& f);

// Simple undirected graph on vertices [0, vertex_count).
struct SimpleGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  std::vector<std::vector<int>> adjacency() const;
};

SimpleGraph complete_graph(int n);
SimpleGraph complete_bipartite(int a, int b);

// Bipartite clause/variable graph. Vertex v-1 is variable v; vertex
// var_count + j is clause j.
struct IncidenceGraph {
  int var_count = 0;
  int clause_count = 0;
  SimpleGraph graph;

  int variable_vertex(int var) const { return var - 1; }
  int clause_vertex(int clause) const { return var_count + clause; }
  bool is_clause_vertex(int v) const { return v >= var_count; }
};

IncidenceGraph incidence_graph(const Cnf& f);

// Rotation system: for each vertex, its neighbours in clockwise order.
using Rotation = std::vector<std::vector<int>>;

struct PlanarityReport {
  bool planar = false;
  Rotation witness;  // empty unless planar
};

PlanarityReport is_planar(const SimpleGraph& g);

inline constexpr int kGeneratorMaxVars = 12;
inline constexpr int kGeneratorRetryBudget = 2000;

// Random formula whose incidence graph is planar; deterministic per seed.
Cnf gen_planar_3sat(int var_count, int clause_count, std::uint64_t seed);

}  // namespace rtile::formula

#endif  // RTILE_FORMULA_HPP_
