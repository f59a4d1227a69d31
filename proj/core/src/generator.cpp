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

#include "riskplan/generator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace riskplan {

namespace {

void check_range(const Range& r, const char* name, double lo, double hi) {
  if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || r.lo > r.hi || r.lo < lo || r.hi > hi) {
    throw Error(ErrorCode::InvalidRange, std::string(name) + " range [" + std::to_string(r.lo) +
                                             ", " + std::to_string(r.hi) + "] is not allowed");
  }
}

// std::uniform_real_distribution is implementation-defined; this mapping is not.
double draw(std::mt19937_64& gen, const Range& r) {
  const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
  return std::min(r.hi, r.lo + (r.hi - r.lo) * u);
}

}  // namespace

Instance generate_instance(const GeneratorOptions& options) {
  check_range(options.theta, "theta", 0.0, HUGE_VAL);
  check_range(options.reward, "reward", 0.0, HUGE_VAL);
  check_range(options.rho, "rho", 0.0, 1.0);
  if (options.horizon.is_finite() && options.horizon.epochs() < 1) {
    throw Error(ErrorCode::InvalidRange, "horizon must have at least one epoch");
  }

  std::mt19937_64 gen(options.seed);
  InstanceData data;
  data.horizon = options.horizon;
  data.theta = draw(gen, options.theta);
  data.packages.reserve(options.n);
  for (std::size_t i = 0; i < options.n; ++i) {
    const double reward = draw(gen, options.reward);
    const double rho = draw(gen, options.rho);
    data.packages.push_back({static_cast<PackageId>(i), reward, rho});
  }
  return Instance(std::move(data));
}

}  // namespace riskplan
