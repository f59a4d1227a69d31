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

// Seeded random instances for experiments and tests.

#ifndef RISKPLAN_GENERATOR_HPP_
#define RISKPLAN_GENERATOR_HPP_

#include <cstddef>
#include <cstdint>

#include "riskplan/model.hpp"

namespace riskplan {

/// Closed interval [lo, hi].
struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

struct GeneratorOptions {
  std::size_t n = 10;
  Horizon horizon = Horizon::finite(10);
  Range theta{0.0, 1.0};
  Range reward{0.0, 10.0};
  /// Leg success probabilities; must lie in [0, 1].
  Range rho{0.5, 0.99};
  std::uint64_t seed = 0;
};

/// Deterministic given the options. Package ids are 0..n-1.
/// Throws Error(InvalidRange) for empty, non-finite or out-of-domain ranges.
Instance generate_instance(const GeneratorOptions& options);

}  // namespace riskplan

#endif  // RISKPLAN_GENERATOR_HPP_
