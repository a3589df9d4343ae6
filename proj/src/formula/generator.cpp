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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rtile/error.hpp"
#include "rtile/formula.hpp"

namespace rtile::formula {
namespace {

// Unbiased draw from [0, bound). std::uniform_int_distribution is not
// specified bit-for-bit across standard libraries, so seeds would not be
// portable with it.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

Clause random_clause(std::mt19937_64& rng, int var_count) {
  std::vector<int> pool(var_count);
  for (int v = 0; v < var_count; ++v) pool[v] = v + 1;
  Clause c;
  for (int i = 0; i < 3; ++i) {
    auto pick = static_cast<int>(draw(rng, pool.size() - i)) + i;
    std::swap(pool[i], pool[pick]);
    c.literals[i] = Literal{pool[i], draw(rng, 2) == 1};
  }
  return c;
}

}  // namespace

Cnf gen_planar_3sat(int var_count, int clause_count, std::uint64_t seed) {
  if (var_count < 1 || var_count > kGeneratorMaxVars) {
    throw Error(ErrorCode::kInvalidArgument,
                "variable count must be in [1, " +
                    std::to_string(kGeneratorMaxVars) + "]");
  }
  if (clause_count < 0) {
    throw Error(ErrorCode::kInvalidArgument, "clause count must be >= 0");
  }
  if (clause_count > 0 && var_count < 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "clauses need at least 3 variables");
  }
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kGeneratorRetryBudget; ++attempt) {
    std::vector<Clause> clauses;
    clauses.reserve(clause_count);
    for (int j = 0; j < clause_count; ++j) {
      clauses.push_back(random_clause(rng, var_count));
    }
    Cnf f(var_count, std::move(clauses));
    if (is_planar(incidence_graph(f).graph).planar) return f;
  }
  throw Error(ErrorCode::kGenerationFailed,
              "no planar formula within " +
                  std::to_string(kGeneratorRetryBudget) + " attempts");
}

}  // namespace rtile::formula
