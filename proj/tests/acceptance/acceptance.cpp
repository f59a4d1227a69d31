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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "riskplan/expectation.hpp"
#include "riskplan/finite_solver.hpp"
#include "riskplan/infinite_solver.hpp"
#include "riskplan/mdp.hpp"
#include "riskplan/oracle.hpp"
#include "riskplan/poisson_binomial.hpp"
#include "riskplan/simulate.hpp"
#include "riskplan/team.hpp"
#include "support/properties.hpp"
#include "support/random_instances.hpp"
#include "support/team_oracle.hpp"

namespace riskplan {
namespace {

using testing::Rng;

// Pinned tolerances.
constexpr double kOracleTol = 1e-9;
constexpr double kGapTol = 1e-9;
constexpr double kTriangleTol = 1e-6;
constexpr double kDominanceTol = 1e-9;
constexpr double kConvergenceTol = 1e-4;
constexpr double kSigmas = 4.0;
constexpr double kPbdAgreeTol = 1e-10;
constexpr double kPbdSumTol = 1e-12;
constexpr double kPbdIdentityTol = 1e-10;
constexpr double kSubmodularTol = 1e-10;
constexpr double kFiniteSolveSeconds = 5.0;
constexpr double kInfiniteSolveSeconds = 0.1;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

/// Random homogeneous instance from the oracle suite: n <= 4, K <= 3.
Instance oracle_instance(Rng& rng) {
  const auto n = testing::uniform_index(rng, 5);
  const auto k = 1 + testing::uniform_index(rng, 3);
  return testing::random_instance(rng, n, Horizon::finite(static_cast<std::int64_t>(k)));
}

Outcome oracle_optimality() {
  Rng rng(1001);
  const auto start = std::chrono::steady_clock::now();
  int value_mismatch = 0, plan_mismatch = 0, plan_checks = 0;
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto inst = oracle_instance(rng);
    const auto solved = solve_finite(inst);
    const auto oracle = brute_force_finite(inst);
    const double err = std::abs(solved.total() - oracle.value);
    worst = std::max(worst, err);
    if (err > kOracleTol) ++value_mismatch;
    if (testing::ratio_gaps_exceed(inst, solved, kGapTol)) {
      ++plan_checks;
      if (std::get<FinitePlans>(solved.mission_plan()) != oracle.plan) ++plan_mismatch;
    }
  }
  // The same check on per-epoch catalogs.
  for (int i = 0; i < 100; ++i) {
    const auto n = testing::uniform_index(rng, 5);
    const auto k = 1 + testing::uniform_index(rng, 3);
    const auto inst = testing::random_heterogeneous(rng, n, k);
    const auto solved = solve_finite_heterogeneous(inst);
    const auto oracle = brute_force_finite(inst);
    const double err = std::abs(solved.total() - oracle.value);
    worst = std::max(worst, err);
    if (err > kOracleTol) ++value_mismatch;
    if (testing::ratio_gaps_exceed(inst, solved, kGapTol)) {
      ++plan_checks;
      if (std::get<FinitePlans>(solved.mission_plan()) != oracle.plan) ++plan_mismatch;
    }
  }
  const double elapsed = seconds_since(start);
  return {value_mismatch == 0 && plan_mismatch == 0 && elapsed < 300.0,
          fmt("300 instances (200 homogeneous + 100 per-epoch), max |V1 - oracle| = %.2e, "
              "%d value mismatches, %d/%d plan mismatches, %.1f s",
              worst, value_mismatch, plan_mismatch, plan_checks, elapsed)};
}

Outcome infinite_triangle() {
  Rng rng(1002);
  int failures = 0, closed_form_misses = 0;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto n = 1 + testing::uniform_index(rng, 6);
    const auto inst = testing::random_instance(rng, n, Horizon::infinite(), {.rho_hi = 0.95});
    const auto solved = solve_infinite(inst);
    const double total = solved.total.value();
    if (total != std::max(0.0, solved.gamma_max.value - inst.theta())) ++closed_form_misses;

    const auto model = build_model(inst);
    const double mdp = best_stationary_policy(model).value.value();
    auto truncated = inst.data();
    truncated.horizon = Horizon::finite(500);
    const double series = evaluate_mission(solved.plan(), Instance(truncated)).total.value();
    double iterative = 0.0;
    if (solved.chosen) {
      Action a = 0;
      for (std::size_t j = 0; j < model.package_count(); ++j) {
        if (model.packages()[j].id == *solved.chosen) a = Action{1} << j;
      }
      iterative = evaluate_policy(model, a).iterative;
    }
    const double err = std::max({std::abs(total - mdp), std::abs(total - series),
                                 std::abs(mdp - series), std::abs(total - iterative)});
    worst = std::max(worst, err);
    if (err > kTriangleTol) ++failures;
  }
  return {failures == 0 && closed_form_misses == 0,
          fmt("100 instances, max pairwise gap %.2e (solver, MDP search, MDP iteration, K=500 "
              "series), %d closed-form misses",
              worst, closed_form_misses)};
}

Outcome stationary_dominance() {
  Rng rng(1003);
  long plans = 0;
  int violations = 0;
  for (int i = 0; i < 60; ++i) {
    const auto n = 1 + testing::uniform_index(rng, 5);
    const auto inst = testing::random_instance(rng, n, Horizon::infinite(), {.rho_hi = 0.999});
    const double best = solve_infinite(inst).total.value();
    const auto ids = testing::catalog_ids(inst, std::nullopt);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<PackageId> subset;
      for (std::size_t j = 0; j < n; ++j) {
        if (mask & (1u << j)) subset.push_back(ids[j]);
      }
      std::sort(subset.begin(), subset.end());
      do {
        ++plans;
        const double v = evaluate_mission(StationaryPlan{{subset}}, inst).total.value();
        if (v > best + kDominanceTol * std::max(1.0, std::abs(best))) ++violations;
      } while (std::next_permutation(subset.begin(), subset.end()));
    }
  }
  return {violations == 0,
          fmt("60 instances (n <= 5), %ld stationary plans, %d exceed the solver", plans, violations)};
}

Outcome ratio_ordering() {
  Rng rng(1001);  // the oracle suite
  int counterexamples = 0, epochs = 0;
  for (int i = 0; i < 200; ++i) {
    const auto inst = oracle_instance(rng);
    const auto oracle = brute_force_finite(inst);
    for (const auto& plan : oracle.plan.plans) {
      ++epochs;
      if (!testing::ordered_by_ratio(inst, FinitePlans{{plan}}, kGapTol)) ++counterexamples;
    }
  }
  return {counterexamples == 0,
          fmt("%d brute-force epoch plans, %d out of ratio order", epochs, counterexamples)};
}

Outcome threshold_perturbation() {
  Rng rng(1005);
  std::size_t checks = 0, failures = 0;
  std::string first;
  auto run = [&](const Instance& inst) {
    const auto solved = inst.heterogeneous() ? solve_finite_heterogeneous(inst) : solve_finite(inst);
    const auto tally = testing::perturbation_checks(inst, solved, kGapTol);
    checks += tally.checks;
    failures += tally.failures.size();
    if (first.empty() && !tally.failures.empty()) first = tally.failures.front();
  };
  for (int i = 0; i < 200; ++i) run(oracle_instance(rng));
  for (int i = 0; i < 200; ++i) {
    const auto n = testing::uniform_index(rng, 25);
    const auto k = 1 + testing::uniform_index(rng, 12);
    run(testing::random_instance(rng, n, Horizon::finite(static_cast<std::int64_t>(k))));
  }
  for (int i = 0; i < 100; ++i) {
    run(testing::random_heterogeneous(rng, testing::uniform_index(rng, 15),
                                      1 + testing::uniform_index(rng, 8)));
  }
  return {failures == 0,
          fmt("500 solved instances, %zu removals/appends, %zu did not lower the value%s%s", checks,
              failures, first.empty() ? "" : "; first: ", first.c_str())};
}

Outcome nested_plans() {
  Rng rng(1006);
  int subset_failures = 0, monotone_failures = 0, convergence_failures = 0;
  double worst_gap = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto n = testing::uniform_index(rng, 40);
    const auto k = 1 + testing::uniform_index(rng, 30);
    const auto inst = testing::random_instance(rng, n, Horizon::finite(static_cast<std::int64_t>(k)));
    const auto solved = solve_finite(inst);
    for (std::size_t h = 0; h + 1 < k; ++h) {
      const auto now = solved.epoch_plan(h).ordered_ids;
      const auto next = solved.epoch_plan(h + 1).ordered_ids;
      const std::set<PackageId> a(now.begin(), now.end()), b(next.begin(), next.end());
      if (!std::includes(b.begin(), b.end(), a.begin(), a.end())) ++subset_failures;
    }
  }
  for (int i = 0; i < 100; ++i) {
    auto data = testing::random_data(rng, 1 + testing::uniform_index(rng, 8), Horizon::infinite(),
                                     {.rho_hi = 0.95});
    const double infinite = solve_infinite(Instance(data)).total.value();
    double previous = -INFINITY;
    for (std::int64_t k = 1; k <= 200; ++k) {
      data.horizon = Horizon::finite(k);
      const double v = solve_finite(Instance(data)).total();
      if (v < previous - 1e-12 * std::max(1.0, std::abs(previous))) ++monotone_failures;
      previous = v;
    }
    const double gap = std::abs(previous - infinite);
    worst_gap = std::max(worst_gap, gap);
    if (gap > kConvergenceTol) ++convergence_failures;
  }
  return {subset_failures == 0 && monotone_failures == 0 && convergence_failures == 0,
          fmt("200 homogeneous instances: %d subset-chain breaks; 100 catalogs over K = 1..200: "
              "%d decreases, max |V1(200) - infinite| = %.2e",
              subset_failures, monotone_failures, worst_gap)};
}

Outcome monte_carlo() {
  Rng rng(1007);
  int within = 0;
  const int pairs = 100;
  SimConfig config;
  config.trials = 100'000;
  for (int i = 0; i < pairs; ++i) {
    config.seed = 7000 + static_cast<std::uint64_t>(i);
    double exact = 0.0;
    SimResult sim;
    if (i % 5 == 4) {
      const auto inst = testing::random_instance(rng, 1 + testing::uniform_index(rng, 4),
                                                 Horizon::infinite(), {.rho_lo = 0.3, .rho_hi = 0.95});
      const StationaryPlan plan{
          testing::random_epoch_plan(rng, testing::catalog_ids(inst, std::nullopt))};
      exact = evaluate_mission(plan, inst).total.value();
      sim = simulate_mission(plan, inst, config);
    } else {
      const auto inst = testing::random_instance(rng, testing::uniform_index(rng, 7),
                                                 Horizon::finite(1 + testing::uniform_index(rng, 5)));
      const auto plan = testing::random_finite_plans(rng, inst);
      exact = evaluate_mission(plan, inst).total.value();
      sim = simulate_mission(plan, inst, config);
    }
    const double err = std::abs(sim.mean - exact);
    if (err <= kSigmas * sim.std_error || err <= 1e-12 * std::max(1.0, std::abs(exact))) ++within;
  }

  int shard_mismatch = 0;
  config.trials = 20'000;
  for (int i = 0; i < 10; ++i) {
    const auto inst = testing::random_instance(rng, 5, Horizon::finite(4));
    const auto plan = testing::random_finite_plans(rng, inst);
    config.seed = 99 + static_cast<std::uint64_t>(i);
    config.parallel_shards = 1;
    const auto base = simulate_mission(plan, inst, config);
    for (std::size_t shards : {4, 16}) {
      config.parallel_shards = shards;
      const auto other = simulate_mission(plan, inst, config);
      if (other.mean != base.mean || other.std_error != base.std_error ||
          other.per_epoch_survival_freq != base.per_epoch_survival_freq ||
          other.failure_epoch_histogram != base.failure_epoch_histogram ||
          other.survivors != base.survivors) {
        ++shard_mismatch;
      }
    }
  }
  return {within >= 99 && shard_mismatch == 0,
          fmt("%d/%d pairs within 4 std errors at 1e5 trials; %d shard-count mismatches "
              "over shards {1, 4, 16}",
              within, pairs, shard_mismatch)};
}

Outcome poisson_binomial_checks() {
  Rng rng(1008);
  double agree = 0.0, sum = 0.0, identity = 0.0, binom = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto n = testing::uniform_index(rng, 13);
    std::vector<double> probs(n);
    for (auto& p : probs) p = testing::uniform(rng, 0.0, 1.0);
    const auto e = poisson_binomial_enum(probs);
    const auto d = poisson_binomial_dft(probs);
    const double mean = std::accumulate(probs.begin(), probs.end(), 0.0);
    for (std::size_t b = 0; b <= n; ++b) agree = std::max(agree, std::abs(e.pmf[b] - d.pmf[b]));
    for (const auto* pb : {&e, &d}) {
      sum = std::max(sum, std::abs(std::accumulate(pb->pmf.begin(), pb->pmf.end(), 0.0) - 1.0));
      identity = std::max({identity, std::abs(pb->mean() - mean),
                           std::abs(pb->expected_failures() - (static_cast<double>(n) - mean))});
    }
  }
  for (std::size_t n = 1; n <= 30; ++n) {
    const double p = testing::uniform(rng, 0.0, 1.0);
    const std::vector<double> probs(n, p);
    const auto d = poisson_binomial_dft(probs);
    const auto e = n <= 12 ? poisson_binomial_enum(probs) : d;
    double c = 1.0;
    for (std::size_t k = 0; k <= n; ++k) {
      const double want =
          c * std::pow(p, static_cast<double>(k)) * std::pow(1 - p, static_cast<double>(n - k));
      binom = std::max({binom, std::abs(d.pmf[k] - want), std::abs(e.pmf[k] - want)});
      c = c * static_cast<double>(n - k) / static_cast<double>(k + 1);
    }
  }
  const bool pass = agree <= kPbdAgreeTol && sum <= kPbdSumTol && identity <= kPbdIdentityTol &&
                    binom <= kPbdAgreeTol;
  return {pass, fmt("1000 random sets (size <= 12): max |dft - enum| = %.1e, max |sum - 1| = %.1e, "
                    "max identity error = %.1e; binomial reduction (size <= 30) = %.1e",
                    agree, sum, identity, binom)};
}

Outcome submodularity() {
  Rng rng(1009);
  int checks = 0, violations = 0;
  double worst = 0.0;
  auto sorted = [](const Instance& inst, std::vector<PackageId>& ids) {
    std::sort(ids.begin(), ids.end(), [&](PackageId a, PackageId b) {
      return ranks_before(inst.package(a), inst.package(b));
    });
  };
  while (checks < 1000) {
    const auto inst = testing::random_instance(rng, 3 + testing::uniform_index(rng, 6), Horizon::finite(1));
    const auto agents = 1 + testing::uniform_index(rng, 3);
    TeamEpochPlan team;
    team.tours.resize(agents);
    std::vector<PackageId> free;
    for (const auto& p : inst.packages()) {
      const auto slot = testing::uniform_index(rng, agents + 2);
      if (slot < agents) {
        team.tours[slot].ordered_ids.push_back(p.id);
      } else {
        free.push_back(p.id);
      }
    }
    for (auto& t : team.tours) sorted(inst, t.ordered_ids);
    if (free.size() < 2) continue;
    const PackageId tr = free[0], ts = free[1];
    const auto ar = testing::uniform_index(rng, agents), as = testing::uniform_index(rng, agents);
    if (insertion_gain(team, inst, ar, tr, {}) <= 0.0) continue;
    const double before = insertion_gain(team, inst, as, ts, {});
    if (before <= 0.0) continue;
    auto bigger = team;
    bigger.tours[ar].ordered_ids.push_back(tr);
    sorted(inst, bigger.tours[ar].ordered_ids);
    const double after = insertion_gain(bigger, inst, as, ts, {});
    ++checks;
    worst = std::max(worst, after - before);
    if (after > before + kSubmodularTol) ++violations;
  }

  int below_bound = 0;
  double worst_ratio = INFINITY;
  for (int i = 0; i < 50; ++i) {
    const auto k = 1 + testing::uniform_index(rng, 2);
    const auto inst = testing::random_instance(rng, 3, Horizon::finite(static_cast<std::int64_t>(k)));
    const double greedy = greedy_rtpd(inst, 2).total();
    const double opt = testing::team_brute_force(inst, 2);
    if (greedy < std::pow(2.0, -static_cast<double>(k)) * opt - 1e-12) ++below_bound;
    if (opt > 0.0) worst_ratio = std::min(worst_ratio, greedy / opt);
  }
  return {violations == 0 && below_bound == 0,
          fmt("%d additions, %d gain increases beyond 1e-10 (max change %+.1e); 50 tiny team "
              "instances, %d below 2^-K of optimum (worst greedy/optimum = %.4f)",
              checks, violations, worst, below_bound, worst_ratio)};
}

Outcome performance() {
  Rng rng(1010);
  InstanceData data;
  data.theta = 1.0;
  data.horizon = Horizon::finite(1000);
  data.packages.reserve(1'000'000);
  for (std::size_t i = 0; i < 1'000'000; ++i) {
    data.packages.push_back({static_cast<PackageId>(i), testing::uniform(rng, 0.0, 10.0),
                             testing::uniform(rng, 0.0, 1.0)});
  }
  const Instance finite(data);
  auto start = std::chrono::steady_clock::now();
  const auto solved = solve_finite(finite);
  const double finite_s = seconds_since(start);

  data.horizon = Horizon::infinite();
  const Instance infinite(std::move(data));
  start = std::chrono::steady_clock::now();
  const auto inf = solve_infinite(infinite);
  const double infinite_s = seconds_since(start);
  return {finite_s < kFiniteSolveSeconds && infinite_s < kInfiniteSolveSeconds,
          fmt("solve_finite n = 1e6, K = 1e3: %.3f s (V1 = %.4f); solve_infinite n = 1e6: %.1f ms",
              finite_s, solved.total(), infinite_s * 1e3) +
              (inf.chosen ? "" : " (no package chosen)")};
}

}  // namespace
}  // namespace riskplan

int main() {
  using namespace riskplan;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"oracle optimality", oracle_optimality},
      {"infinite-horizon triangle", infinite_triangle},
      {"stationary dominance", stationary_dominance},
      {"ratio ordering", ratio_ordering},
      {"threshold perturbation", threshold_perturbation},
      {"nested plans and convergence", nested_plans},
      {"Monte Carlo agreement", monte_carlo},
      {"Poisson binomial", poisson_binomial_checks},
      {"submodularity and greedy bound", submodularity},
      {"performance", performance},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed),
              criteria.size());
  return failed == 0 ? 0 : 1;
}
