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
#ifndef RTILE_REDUCTION_HPP_
#define RTILE_REDUCTION_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rtile/error.hpp"
#include "rtile/formula.hpp"
#include "rtile/gadgetry.hpp"
#include "rtile/instance.hpp"
#include "rtile/layout.hpp"

namespace rtile::reduction {

// One variable loop as filled: |Z| cells, of which P start phase changers.
struct LoopRecord {
  int variable = 0;
  int length = 0;    // |Z|
  int changers = 0;  // P(Z)
  gadgetry::SegmentSummary plan;
  gadgetry::LoopFill fill;
};

// p = loop_term + clause_term + three_count, with
// loop_term = sum(|Z| - P) / 2 and clause_term = 2k.
struct Budget {
  std::int64_t loop_term = 0;
  std::int64_t clause_term = 0;
  std::int64_t three_count = 0;

  std::int64_t total() const { return loop_term + clause_term + three_count; }
};

struct ReductionCertificate {
  formula::Cnf formula;
  layout::Layout layout;
  std::map<int, LoopRecord> loops;  // by variable
  int clause_count = 0;             // k
  Budget budget;
};

struct Reduction {
  RtileInstance instance;
  ReductionCertificate certificate;
};

// Builds the weight grid and budget for f: 3s everywhere, overwritten by
// the clause gadgets and the filled variable loops. Throws kNotPlanar or
// kRoutingFailed.
Reduction reduce(const formula::Cnf& f);
Reduction reduce(const formula::Cnf& f, const gadgetry::GadgetPattern& gadget);

// The weight grid described by a certificate.
WeightGrid build_grid(const ReductionCertificate& cert);

struct LoopCount {
  int length = 0;
  int changers = 0;
};

// Throws kParityViolation when sum(|Z| - P) is odd.
std::int64_t compute_p(const std::vector<LoopCount>& loops, int clause_count,
                       std::int64_t three_count);
std::int64_t compute_p(const ReductionCertificate& cert);

// Even loop lengths, even changer counts, an integral budget whose parts
// match a recount of the grid, and the layout and fill invariants. With an
// instance, also checks that its grid and budget match the certificate.
ValidationReport verify_reduction(const ReductionCertificate& cert,
                                  const RtileInstance* instance = nullptr);

// A tiling with one tile per 3-cell, each loop in the covering mode of its
// variable's value, and each gadget joined to the loop of its first true
// literal. Uses exactly p tiles. Throws kUnsatisfiedClause when some clause
// has no true literal.
Tiling assignment_to_tiling(const ReductionCertificate& cert,
                            const formula::Assignment& a);

// Reads a value for every variable from the ports its loop joins to a
// gadget; variables joined nowhere default to true. Throws kInvalidTiling,
// kBudgetExceeded, or kInconsistentModes when one loop joins gadgets
// through literals of both signs.
formula::Assignment tiling_to_assignment(const ReductionCertificate& cert,
                                         const Tiling& tiles);

// Line-oriented summary of the certificate for golden-file tests.
std::string certificate_text(const ReductionCertificate& cert);

}  // namespace rtile::reduction

#endif  // RTILE_REDUCTION_HPP_
