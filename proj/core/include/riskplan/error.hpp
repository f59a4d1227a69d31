// Copyright 2026 The riskplan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RISKPLAN_ERROR_HPP_
#define RISKPLAN_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace riskplan {

enum class ErrorCode {
  // Instance validation.
  NegativeReward,
  NegativeTheta,
  ProbabilityOutOfRange,
  InvalidId,
  DuplicateId,
  HorizonMismatch,
  UnknownPackageId,
  RepeatedPackage,
  // Numeric domain.
  DomainError,
  EmptyPlan,
  UnboundedValue,
  NonConvergence,
  // Solver preconditions.
  InfiniteHorizon,
  FiniteHorizon,
  InvalidInstance,
  MissingPerEpochCatalog,
  // Scale limits.
  TooManyPackages,
  SearchSpaceTooLarge,
  TooManyTrials,
  ScaleLimitExceeded,
  // Simulation.
  UnboundedSimulation,
  // Team extension.
  OverlappingTours,
  DegenerateQuotient,
  AlreadyAssigned,
  // I/O and generation.
  InvalidRange,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// True for the codes that signal an enumeration or experimental scale cap.
bool is_scale_limit(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct Violation {
  ErrorCode code;
  std::string message;
};

/// Thrown when an Instance is built from data that breaks an invariant.
/// Carries every violation, not just the first.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);

  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

}  // namespace riskplan

#endif  // RISKPLAN_ERROR_HPP_
