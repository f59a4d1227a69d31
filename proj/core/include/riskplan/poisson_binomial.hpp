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

// Distribution of the number of surviving agents when agent m independently
// completes its tour with probability probs[m].

#ifndef RISKPLAN_POISSON_BINOMIAL_HPP_
#define RISKPLAN_POISSON_BINOMIAL_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace riskplan {

inline constexpr std::size_t kMaxEnumerationTrials = 20;
inline constexpr std::size_t kMaxDftTrials = 10'000;

struct PoissonBinomial {
  std::vector<double> probs;
  /// pmf[b] = P(b successes out of probs.size()).
  std::vector<double> pmf;

  double mean() const;
  double expected_failures() const;
};

/// Sums over all 2^n success subsets. Throws Error(TooManyTrials) above
/// kMaxEnumerationTrials and Error(DomainError) for probabilities outside [0, 1].
PoissonBinomial poisson_binomial_enum(std::span<const double> probs);

/// Characteristic-function form:
///   P(j) = 1/(n+1) sum_l w^{-lj} prod_m (1 + (w^l - 1) p_m),  w = exp(2 pi i / (n+1)).
/// Imaginary residue is dropped; negative round-off is clamped to zero and the
/// pmf renormalized. Throws Error(TooManyTrials) above kMaxDftTrials.
PoissonBinomial poisson_binomial_dft(std::span<const double> probs);

/// Enumeration for small teams, the DFT form otherwise.
PoissonBinomial poisson_binomial(std::span<const double> probs);

/// (P'(b) - P(b)) / (new_prob - probs[agent]) where P' replaces probs[agent] by
/// new_prob. Throws Error(DegenerateQuotient) when the two probabilities match.
std::vector<double> poisson_quotient_difference(std::span<const double> probs, std::size_t agent,
                                                double new_prob);

/// The same quotient in closed form: with Q the distribution of the other
/// agents, the quotient is Q(b-1) - Q(b), which does not involve probs[agent].
std::vector<double> quotient_without_agent(std::span<const double> probs, std::size_t agent);

}  // namespace riskplan

#endif  // RISKPLAN_POISSON_BINOMIAL_HPP_
