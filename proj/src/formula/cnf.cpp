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
#include <string>

#include "rtile/error.hpp"
#include "rtile/formula.hpp"

namespace rtile::formula {

bool Clause::mentions(int var) const {
  return std::any_of(literals.begin(), literals.end(),
                     [var](const Literal& l) { return l.var == var; });
}

const Literal& Clause::literal_of(int var) const {
  for (const auto& l : literals) {
    if (l.var == var) return l;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "clause does not mention x" + std::to_string(var));
}

Clause make_clause(int a, int b, int c) {
  auto lit = [](int v) { return Literal{v < 0 ? -v : v, v < 0}; };
  return Clause{{lit(a), lit(b), lit(c)}};
}

Cnf::Cnf(int var_count, std::vector<Clause> clauses)
    : var_count_(var_count), clauses_(std::move(clauses)) {
  if (var_count_ < 1) {
    throw Error(ErrorCode::kIndexOutOfRange, "variable count must be positive");
  }
  for (std::size_t j = 0; j < clauses_.size(); ++j) {
    const auto& lits = clauses_[j].literals;
    for (int i = 0; i < 3; ++i) {
      if (lits[i].var < 1 || lits[i].var > var_count_) {
        throw Error(ErrorCode::kIndexOutOfRange,
                    "clause " + std::to_string(j + 1) + ": variable " +
                        std::to_string(lits[i].var) + " outside [1, " +
                        std::to_string(var_count_) + "]");
      }
      for (int k = 0; k < i; ++k) {
        if (lits[k].var == lits[i].var) {
          throw Error(ErrorCode::kDuplicateVariable,
                      "clause " + std::to_string(j + 1) + ": variable " +
                          std::to_string(lits[i].var) + " repeated");
        }
      }
    }
  }
}

std::vector<int> Cnf::occurrences(int var) const {
  std::vector<int> out;
  for (int j = 0; j < clause_count(); ++j) {
    if (clauses_[j].mentions(var)) out.push_back(j);
  }
  return out;
}

Assignment Assignment::all(int var_count, bool value) {
  Assignment a;
  a.values.assign(var_count + 1, value);
  a.values[0] = false;
  return a;
}

bool satisfies(const Cnf& f, const Assignment& a) {
  if (a.var_count() < f.var_count()) return false;
  for (const auto& clause : f.clauses()) {
    bool sat = false;
    for (const auto& lit : clause.literals) sat = sat || lit.holds(a[lit.var]);
    if (!sat) return false;
  }
  return true;
}

std::optional<Assignment> sat_oracle(const Cnf& f) {
  const int n = f.var_count();
  if (n > kSatOracleMaxVars) {
    throw Error(ErrorCode::kTooLarge,
                "exhaustive search is limited to " +
                    std::to_string(kSatOracleMaxVars) + " variables, got " +
                    std::to_string(n));
  }
  // Bit (n - v) of the counter is x_v, so counting upwards walks
  // assignments in lexicographic order with x1 most significant.
  struct Mask {
    std::uint32_t vars = 0;
    std::uint32_t falsifying = 0;  // bit set where the literal is negative
  };
  std::vector<Mask> masks;
  masks.reserve(f.clauses().size());
  for (const auto& clause : f.clauses()) {
    Mask m;
    for (const auto& lit : clause.literals) {
      const std::uint32_t bit = 1u << (n - lit.var);
      m.vars |= bit;
      if (lit.negated) m.falsifying |= bit;
    }
    masks.push_back(m);
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const auto x = static_cast<std::uint32_t>(bits);
    bool ok = true;
    for (const auto& m : masks) {
      // A clause is false exactly when every variable takes the value that
      // falsifies its literal: x == falsifying on the clause's bits.
      if (((x ^ m.falsifying) & m.vars) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      Assignment a = Assignment::all(n, false);
      for (int v = 1; v <= n; ++v) a.values[v] = (x >> (n - v)) & 1u;
      return a;
    }
  }
  return std::nullopt;
}

}  // namespace rtile::formula
