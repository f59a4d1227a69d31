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

#include "riskplan/poisson_binomial.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>

#include "riskplan/error.hpp"

namespace riskplan {

namespace {

void check_probs(std::span<const double> probs) {
  for (double p : probs) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw Error(ErrorCode::DomainError, "trial probabilities must lie in [0, 1]");
    }
  }
}

}  // namespace

double PoissonBinomial::mean() const {
  double m = 0.0;
  for (std::size_t b = 0; b < pmf.size(); ++b) m += static_cast<double>(b) * pmf[b];
  return m;
}

double PoissonBinomial::expected_failures() const {
  const double n = static_cast<double>(probs.size());
  double f = 0.0;
  for (std::size_t b = 0; b < pmf.size(); ++b) f += (n - static_cast<double>(b)) * pmf[b];
  return f;
}

PoissonBinomial poisson_binomial_enum(std::span<const double> probs) {
  if (probs.size() > kMaxEnumerationTrials) {
    throw Error(ErrorCode::TooManyTrials,
                std::to_string(probs.size()) + " trials; enumeration supports up to " +
                    std::to_string(kMaxEnumerationTrials));
  }
  check_probs(probs);
  const std::size_t n = probs.size();
  PoissonBinomial out{{probs.begin(), probs.end()}, std::vector<double>(n + 1, 0.0)};
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
    double weight = 1.0;
    std::size_t successes = 0;
    for (std::size_t m = 0; m < n; ++m) {
      if (subset & (std::uint64_t{1} << m)) {
        weight *= probs[m];
        ++successes;
      } else {
        weight *= 1.0 - probs[m];
      }
    }
    out.pmf[successes] += weight;
  }
  return out;
}

PoissonBinomial poisson_binomial_dft(std::span<const double> probs) {
  if (probs.size() > kMaxDftTrials) {
    throw Error(ErrorCode::TooManyTrials,
                std::to_string(probs.size()) + " trials; the DFT form supports up to " +
                    std::to_string(kMaxDftTrials));
  }
  check_probs(probs);
  using cplx = std::complex<double>;
  const std::size_t n = probs.size();
  const std::size_t points = n + 1;

  // roots[t] = w^t; every exponent below is reduced mod (n + 1).
  std::vector<cplx> roots(points);
  for (std::size_t t = 0; t < points; ++t) {
    roots[t] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(t) /
                                   static_cast<double>(points));
  }
  std::vector<cplx> characteristic(points);
  for (std::size_t l = 0; l < points; ++l) {
    cplx prod{1.0, 0.0};
    const cplx shift = roots[l] - 1.0;
    for (double p : probs) prod *= 1.0 + shift * p;
    characteristic[l] = prod;
  }

  PoissonBinomial out{{probs.begin(), probs.end()}, std::vector<double>(points, 0.0)};
  double total = 0.0;
  for (std::size_t j = 0; j < points; ++j) {
    cplx acc{0.0, 0.0};
    for (std::size_t l = 0; l < points; ++l) {
      const std::size_t t = (points - (l * j) % points) % points;
      acc += roots[t] * characteristic[l];
    }
    const double value = std::max(0.0, acc.real() / static_cast<double>(points));
    out.pmf[j] = value;
    total += value;
  }
  if (total > 0.0) {
    for (double& v : out.pmf) v /= total;
  }
  return out;
}

PoissonBinomial poisson_binomial(std::span<const double> probs) {
  if (probs.size() <= 12) return poisson_binomial_enum(probs);
  return poisson_binomial_dft(probs);
}

std::vector<double> poisson_quotient_difference(std::span<const double> probs, std::size_t agent,
                                                double new_prob) {
  if (agent >= probs.size()) throw Error(ErrorCode::DomainError, "agent index out of range");
  const double old_prob = probs[agent];
  if (new_prob == old_prob) {
    throw Error(ErrorCode::DegenerateQuotient, "the two survival probabilities are equal");
  }
  std::vector<double> changed(probs.begin(), probs.end());
  changed[agent] = new_prob;
  const auto before = poisson_binomial(probs);
  const auto after = poisson_binomial(changed);
  std::vector<double> out(before.pmf.size());
  for (std::size_t b = 0; b < out.size(); ++b) {
    out[b] = (after.pmf[b] - before.pmf[b]) / (new_prob - old_prob);
  }
  return out;
}

std::vector<double> quotient_without_agent(std::span<const double> probs, std::size_t agent) {
  if (agent >= probs.size()) throw Error(ErrorCode::DomainError, "agent index out of range");
  std::vector<double> others;
  others.reserve(probs.size() - 1);
  for (std::size_t m = 0; m < probs.size(); ++m) {
    if (m != agent) others.push_back(probs[m]);
  }
  const auto q = poisson_binomial(others).pmf;
  // P(b) = p Q(b-1) + (1 - p) Q(b), so dP/dp = Q(b-1) - Q(b).
  std::vector<double> out(probs.size() + 1, 0.0);
  for (std::size_t b = 0; b <= probs.size(); ++b) {
    const double below = b > 0 ? q[b - 1] : 0.0;
    const double at = b < q.size() ? q[b] : 0.0;
    out[b] = below - at;
  }
  return out;
}

}  // namespace riskplan
