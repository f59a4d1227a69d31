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

#include "cli.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <chrono>
#include <cstdlib>
#include <memory>
#include <optional>

#include "riskplan/expectation.hpp"
#include "riskplan/finite_solver.hpp"
#include "riskplan/generator.hpp"
#include "riskplan/infinite_solver.hpp"
#include "riskplan/io.hpp"
#include "riskplan/mdp.hpp"
#include "riskplan/model.hpp"
#include "riskplan/oracle.hpp"
#include "riskplan/poisson_binomial.hpp"
#include "riskplan/simulate.hpp"
#include "riskplan/team.hpp"

namespace riskplan::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string output;
  std::string csv;
  std::string plan;
  std::uint64_t trials = 10'000;
  std::optional<std::uint64_t> seed;
  std::size_t shards = 1;
  std::uint64_t epoch_cap = 100'000;
  std::string action;
  std::size_t agents = 1;
  std::vector<double> probs;
  std::string method = "auto";
  std::optional<double> rho;
  std::optional<double> distance;
  double phi = 0.0;
  std::size_t n = 10;
  std::string horizon = "10";
  std::vector<double> theta_range{0.0, 1.0};
  std::vector<double> reward_range{0.0, 10.0};
  std::vector<double> rho_range{0.5, 0.99};
};

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err, true);
  auto logger = std::make_shared<spdlog::logger>("riskplan", sink);
  logger->set_pattern("[%l] %v");
  logger->set_level(spdlog::level::off);
  if (const char* env = std::getenv("RISKPLAN_LOG")) {
    const std::string level(env);
    if (level == "info") logger->set_level(spdlog::level::info);
    if (level == "debug") logger->set_level(spdlog::level::debug);
  }
  return logger;
}

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out, spdlog::logger& log)
      : opt_(opt), out_(out), log_(log) {}

  void emit(const Json& j) const {
    if (opt_.output.empty()) {
      out_ << dump(j);
    } else {
      write_text_file(opt_.output, dump(j));
      log_.info("wrote {}", opt_.output);
    }
  }

  Instance instance() const {
    auto inst = load_instance(opt_.input);
    log_.info("loaded {} packages from {}", inst.package_count(), opt_.input);
    return inst;
  }

  void solve_finite() const {
    const auto inst = instance();
    const auto start = std::chrono::steady_clock::now();
    const auto report =
        inst.heterogeneous() ? riskplan::solve_finite_heterogeneous(inst) : riskplan::solve_finite(inst);
    log_.debug("solved in {} ms", elapsed_ms(start));
    log_.info("total {}", report.total());
    if (!opt_.csv.empty()) write_text_file(opt_.csv, report_csv(report));
    emit(report_json(report));
  }

  void solve_infinite() const {
    const auto inst = instance();
    const auto start = std::chrono::steady_clock::now();
    const auto report = riskplan::solve_infinite(inst);
    log_.debug("solved in {} ms", elapsed_ms(start));
    emit(report_json(report));
  }

  void evaluate() const {
    const auto inst = instance();
    emit(report_json(evaluate_mission(load_plan(opt_.plan), inst)));
  }

  void simulate() const {
    const auto inst = instance();
    SimConfig config;
    config.trials = opt_.trials;
    config.seed = *opt_.seed;
    config.parallel_shards = opt_.shards;
    config.epoch_cap = opt_.epoch_cap;
    const auto plan = load_plan(opt_.plan);
    const auto start = std::chrono::steady_clock::now();
    const auto result = simulate_mission(plan, inst, config);
    log_.debug("{} trials in {} ms", result.trials, elapsed_ms(start));
    emit(report_json(result));
  }

  void oracle() const {
    const auto inst = instance();
    emit(report_json(brute_force_finite(inst)));
  }

  void mdp_eval() const {
    const auto inst = instance();
    const auto model = build_model(inst);
    const std::size_t n = model.package_count();
    Json order = Json::array();
    for (const auto& p : model.packages()) order.push_back(p.id);

    if (!opt_.action.empty()) {
      const Action a = parse_action(opt_.action, n);
      Json j{{"package_order", std::move(order)},
             {"action", format_action(a, n)},
             {"plan", model.induced_plan(a).ordered_ids}};
      const auto value = action_value(model, a);
      if (value.is_unbounded()) {
        j["value"] = to_json(value);
      } else {
        const auto pv = evaluate_policy(model, a);
        j["value"] = pv.closed_form;
        j["iterative"] = pv.iterative;
        j["sweeps"] = pv.sweeps;
      }
      emit(j);
      return;
    }

    Json actions = Json::array();
    for (Action a = 0; a < model.action_count(); ++a) {
      actions.push_back(Json{{"action", format_action(a, n)},
                             {"plan", model.induced_plan(a).ordered_ids},
                             {"value", to_json(action_value(model, a))}});
    }
    const auto best = best_stationary_policy(model);
    emit(Json{{"package_order", std::move(order)},
              {"actions", std::move(actions)},
              {"best",
               {{"action", format_action(best.action, n)},
                {"plan", model.induced_plan(best.action).ordered_ids},
                {"value", to_json(best.value)}}}});
  }

  void team_greedy() const {
    const auto inst = instance();
    emit(report_json(greedy_rtpd(inst, opt_.agents)));
  }

  void pbd() const {
    PoissonBinomial pb;
    if (opt_.method == "enum") {
      pb = poisson_binomial_enum(opt_.probs);
    } else if (opt_.method == "dft") {
      pb = poisson_binomial_dft(opt_.probs);
    } else {
      pb = poisson_binomial(opt_.probs);
    }
    emit(report_json(pb));
  }

  void convert() const {
    double rho = 0.0;
    double distance = 0.0;
    if (opt_.rho) {
      rho = *opt_.rho;
      distance = probability_to_distance(rho, opt_.phi);
    } else {
      distance = *opt_.distance;
      rho = distance_to_probability(distance, opt_.phi);
    }
    emit(Json{{"rho", rho}, {"phi", opt_.phi}, {"distance", distance}});
  }

  void gen() const {
    GeneratorOptions options;
    options.n = opt_.n;
    options.seed = *opt_.seed;
    if (opt_.horizon == "infinite") {
      options.horizon = Horizon::infinite();
    } else {
      std::size_t used = 0;
      long long k = 0;
      try {
        k = std::stoll(opt_.horizon, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != opt_.horizon.size()) {
        throw UsageError("--horizon must be a positive integer or \"infinite\"");
      }
      options.horizon = Horizon::finite(k);
    }
    options.theta = {opt_.theta_range[0], opt_.theta_range[1]};
    options.reward = {opt_.reward_range[0], opt_.reward_range[1]};
    options.rho = {opt_.rho_range[0], opt_.rho_range[1]};
    emit(to_json(generate_instance(options).data()));
  }

 private:
  static long long elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }

  const Options& opt_;
  std::ostream& out_;
  spdlog::logger& log_;
};

void add_input(CLI::App* cmd, Options& opt) {
  cmd->add_option("-i,--input", opt.input, "Instance JSON file")->required();
}

void add_output(CLI::App* cmd, Options& opt) {
  cmd->add_option("-o,--output", opt.output, "Write JSON here instead of stdout");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Risk-aware delivery planning", "riskplan"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "Optimal plans for a single agent");
  solve->require_subcommand(1);
  auto* solve_finite = solve->add_subcommand("finite", "Backward induction over K epochs");
  add_input(solve_finite, opt);
  add_output(solve_finite, opt);
  solve_finite->add_option("--csv", opt.csv, "Also write a per-epoch CSV report");
  auto* solve_infinite = solve->add_subcommand("infinite", "Best stationary plan");
  add_input(solve_infinite, opt);
  add_output(solve_infinite, opt);

  auto* evaluate = app.add_subcommand("evaluate", "Expected reward of a given plan");
  add_input(evaluate, opt);
  add_output(evaluate, opt);
  evaluate->add_option("-p,--plan", opt.plan, "Plan JSON file")->required();

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of a plan's reward");
  add_input(simulate, opt);
  add_output(simulate, opt);
  simulate->add_option("-p,--plan", opt.plan, "Plan JSON file")->required();
  simulate->add_option("--trials", opt.trials, "Number of trials")->check(CLI::PositiveNumber);
  simulate->add_option("--seed", opt.seed, "Random seed")->required();
  simulate->add_option("--shards", opt.shards, "Worker threads")->check(CLI::PositiveNumber);
  simulate->add_option("--epoch-cap", opt.epoch_cap, "Epoch limit for infinite horizons")
      ->check(CLI::PositiveNumber);

  auto* oracle = app.add_subcommand("oracle", "Exhaustive search on a tiny finite instance");
  add_input(oracle, opt);
  add_output(oracle, opt);

  auto* mdp = app.add_subcommand("mdp-eval", "Stationary policies of the epoch MDP");
  add_input(mdp, opt);
  add_output(mdp, opt);
  mdp->add_option("--action", opt.action, "Evaluate one action, e.g. 0101");

  auto* team = app.add_subcommand("team", "Multi-agent planning");
  team->require_subcommand(1);
  auto* team_greedy = team->add_subcommand("greedy", "Greedy marginal-gain allocation");
  add_input(team_greedy, opt);
  add_output(team_greedy, opt);
  team_greedy->add_option("--agents", opt.agents, "Team size")->required();

  auto* pbd = app.add_subcommand("pbd", "Poisson binomial distribution");
  pbd->add_option("--probs", opt.probs, "Comma-separated success probabilities")
      ->required()
      ->delimiter(',');
  pbd->add_option("--method", opt.method, "enum, dft or auto")
      ->check(CLI::IsMember({"auto", "enum", "dft"}));
  add_output(pbd, opt);

  auto* convert = app.add_subcommand("convert", "Leg success probability <-> distance");
  auto* convert_rho = convert->add_option("--rho", opt.rho, "Leg success probability");
  auto* convert_distance = convert->add_option("--distance", opt.distance, "Leg distance");
  convert_rho->excludes(convert_distance);
  convert_distance->excludes(convert_rho);
  convert->add_option("--phi", opt.phi, "Success probability per unit distance")->required();
  add_output(convert, opt);

  auto* gen = app.add_subcommand("gen", "Random instance");
  gen->add_option("--n", opt.n, "Number of packages");
  gen->add_option("--horizon", opt.horizon, "Epoch count or \"infinite\"");
  gen->add_option("--theta", opt.theta_range, "lo,hi")->expected(2)->delimiter(',');
  gen->add_option("--reward", opt.reward_range, "lo,hi")->expected(2)->delimiter(',');
  gen->add_option("--rho", opt.rho_range, "lo,hi")->expected(2)->delimiter(',');
  gen->add_option("--seed", opt.seed, "Random seed")->required();
  add_output(gen, opt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (convert->parsed() && !opt.rho && !opt.distance) {
      throw UsageError("convert needs --rho or --distance");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  auto logger = make_logger(err);
  const Runner runner(opt, out, *logger);
  try {
    if (solve_finite->parsed()) runner.solve_finite();
    if (solve_infinite->parsed()) runner.solve_infinite();
    if (evaluate->parsed()) runner.evaluate();
    if (simulate->parsed()) runner.simulate();
    if (oracle->parsed()) runner.oracle();
    if (mdp->parsed()) runner.mdp_eval();
    if (team_greedy->parsed()) runner.team_greedy();
    if (pbd->parsed()) runner.pbd();
    if (convert->parsed()) runner.convert();
    if (gen->parsed()) runner.gen();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "error: invalid instance\n";
    for (const auto& v : e.violations()) {
      err << "  " << to_string(v.code) << ": " << v.message << '\n';
    }
    return kExitInvalid;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_scale_limit(e.code()) ? kExitScaleLimit : kExitInvalid;
  }
  return kExitOk;
}

}  // namespace riskplan::cli
