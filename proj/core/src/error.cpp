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

#include "riskplan/error.hpp"

#include <utility>

namespace riskplan {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NegativeReward: return "NegativeReward";
    case ErrorCode::NegativeTheta: return "NegativeTheta";
    case ErrorCode::ProbabilityOutOfRange: return "ProbabilityOutOfRange";
    case ErrorCode::InvalidId: return "InvalidId";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::HorizonMismatch: return "HorizonMismatch";
    case ErrorCode::UnknownPackageId: return "UnknownPackageId";
    case ErrorCode::RepeatedPackage: return "RepeatedPackage";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::EmptyPlan: return "EmptyPlan";
    case ErrorCode::UnboundedValue: return "UnboundedValue";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::InfiniteHorizon: return "InfiniteHorizon";
    case ErrorCode::FiniteHorizon: return "FiniteHorizon";
    case ErrorCode::InvalidInstance: return "InvalidInstance";
    case ErrorCode::MissingPerEpochCatalog: return "MissingPerEpochCatalog";
    case ErrorCode::TooManyPackages: return "TooManyPackages";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::TooManyTrials: return "TooManyTrials";
    case ErrorCode::ScaleLimitExceeded: return "ScaleLimitExceeded";
    case ErrorCode::UnboundedSimulation: return "UnboundedSimulation";
    case ErrorCode::OverlappingTours: return "OverlappingTours";
    case ErrorCode::DegenerateQuotient: return "DegenerateQuotient";
    case ErrorCode::AlreadyAssigned: return "AlreadyAssigned";
    case ErrorCode::InvalidRange: return "InvalidRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

bool is_scale_limit(ErrorCode code) {
  switch (code) {
    case ErrorCode::TooManyPackages:
    case ErrorCode::SearchSpaceTooLarge:
    case ErrorCode::TooManyTrials:
    case ErrorCode::ScaleLimitExceeded:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

namespace {

std::string summarize(const std::vector<Violation>& violations) {
  std::string text = std::to_string(violations.size()) + " invariant violation(s)";
  for (const auto& v : violations) {
    text += "\n  ";
    text += to_string(v.code);
    text += ": ";
    text += v.message;
  }
  return text;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(violations.empty() ? ErrorCode::InvalidInstance : violations.front().code,
            summarize(violations)),
      violations_(std::move(violations)) {}

}  // namespace riskplan
