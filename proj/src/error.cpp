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

#include "rtile/error.hpp"

#include <sstream>

namespace rtile {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax: return "SyntaxError";
    case ErrorCode::kClauseArity: return "ClauseArity";
    case ErrorCode::kDuplicateVariable: return "DuplicateVariable";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kGenerationFailed: return "GenerationFailed";
    case ErrorCode::kNotPlanar: return "NotPlanar";
    case ErrorCode::kRoutingFailed: return "RoutingFailed";
    case ErrorCode::kFootprintTooLarge: return "FootprintTooLarge";
    case ErrorCode::kNoPorts: return "NoPorts";
    case ErrorCode::kStraightRunUnavailable: return "StraightRunUnavailable";
    case ErrorCode::kParityUnresolvable: return "ParityUnresolvable";
    case ErrorCode::kTooLong: return "TooLong";
    case ErrorCode::kInvalidFill: return "InvalidFill";
    case ErrorCode::kParityViolation: return "ParityViolation";
    case ErrorCode::kUnsatisfiedClause: return "UnsatisfiedClause";
    case ErrorCode::kInvalidTiling: return "InvalidTiling";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kInconsistentModes: return "InconsistentModes";
    case ErrorCode::kOutOfBounds: return "OutOfBounds";
    case ErrorCode::kScaleExceeded: return "ScaleExceeded";
    case ErrorCode::kInfeasibleBudget: return "InfeasibleBudget";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

void ValidationReport::merge(const ValidationReport& other,
                             std::string_view prefix) {
  for (const auto& v : other.violations) {
    violations.push_back(std::string(prefix) + v);
  }
}

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (const auto& v : violations) out << v << '\n';
  return out.str();
}

}  // namespace rtile
