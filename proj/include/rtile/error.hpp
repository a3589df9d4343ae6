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

#ifndef RTILE_ERROR_HPP_
#define RTILE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rtile {

// Failure categories raised by the core library. The C API maps each one to
// an rtile_status value one-to-one.
enum class ErrorCode {
  kSyntax,
  kClauseArity,
  kDuplicateVariable,
  kIndexOutOfRange,
  kTooLarge,
  kGenerationFailed,
  kNotPlanar,
  kRoutingFailed,
  kFootprintTooLarge,
  kNoPorts,
  kStraightRunUnavailable,
  kParityUnresolvable,
  kTooLong,
  kInvalidFill,
  kParityViolation,
  kUnsatisfiedClause,
  kInvalidTiling,
  kBudgetExceeded,
  kInconsistentModes,
  kOutOfBounds,
  kScaleExceeded,
  kInfeasibleBudget,
  kPreconditionViolated,
  kIo,
  kInvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// List of human-readable invariant violations. Empty means valid.
struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string message) { violations.push_back(std::move(message)); }
  void merge(const ValidationReport& other, std::string_view prefix = {});
  std::string to_string() const;
};

}  // namespace rtile

#endif  // RTILE_ERROR_HPP_
