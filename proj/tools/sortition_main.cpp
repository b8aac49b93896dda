#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sortition/crs.hpp"
#include "sortition/metrics.hpp"
#include "sortition/rec.hpp"
#include "sortition/report_io.hpp"
#include "sortition/stitch.hpp"
#include "sortition/sweeps.hpp"
#include "sortition/weights.hpp"
#include "sortition/wrs.hpp"
#include "sortition/zipf.hpp"

namespace {

using namespace sortition;

struct CommonArgs {
  std::string algorithm;
  std::string weights_path;
  std::uint32_t m = 1;
  std::uint64_t seed = 0;
  std::optional<double> alpha;
  bool permute = false;
  std::uint64_t max_rounds = kDefaultMaxRounds;
  std::uint64_t trials = 100000;
};

Algorithm parse_algorithm(const std::string& name) {
  const auto alg = algorithm_from_name(name);
  if (!alg) throw SortitionError("unknown algorithm: " + name);
  return *alg;
}

int run_select(const CommonArgs& args) {
  const Algorithm alg = parse_algorithm(args.algorithm);
  PrngStream stream(args.seed);
  SelectionOutcome outcome;
  switch (alg) {
    case Algorithm::stitch: {
      const auto w = load_weight_csv(args.weights_path);
      outcome = stitch_select(w, StitchConfig{args.m, args.permute}, stream);
      break;
    }
    case Algorithm::crs: {
      const auto w = load_weight_csv(args.weights_path);
      outcome = crs_select(w, args.m, stream, args.max_rounds);
      break;
    }
    case Algorithm::wrs: {
      if (!args.alpha) throw FeasibilityError("wrs requires --alpha");
      const auto iw = load_integer_weight_csv(args.weights_path);
      const auto cfg = make_wrs_config(args.m, *args.alpha, iw);
      const auto ww = wrs_weights(iw, cfg);
      outcome = wrs_select(iw, cfg, ww, stream, args.max_rounds);
      break;
    }
    case Algorithm::rec: {
      const auto w = load_weight_csv(args.weights_path);
      outcome = rec_select(w, args.m, stream);
      break;
    }
  }
  std::cout << outcome_to_json(outcome, alg, args.seed) << "\n";
  return 0;
}

int run_analyze(const CommonArgs& args) {
  const Algorithm alg = parse_algorithm(args.algorithm);
  DecentralizationReport report;
  if (alg == Algorithm::wrs) {
    const auto iw = load_integer_weight_csv(args.weights_path);
    report = lambda_for(alg, iw, AnalyzeParams{args.m, args.alpha});
  } else {
    const auto w = load_weight_csv(args.weights_path);
    report = lambda_for(alg, w, AnalyzeParams{args.m, args.alpha});
  }
  std::cout << report_to_json(report) << "\n";
  return 0;
}

int run_fairness(const CommonArgs& args) {
  const Algorithm alg = parse_algorithm(args.algorithm);
  FairnessTestResult result;
  if (alg == Algorithm::wrs) {
    const auto iw = load_integer_weight_csv(args.weights_path);
    const auto w = iw.normalized();
    result = empirical_fairness(alg, w, &iw, AnalyzeParams{args.m, args.alpha}, args.trials,
                                PrngStream(args.seed));
  } else {
    const auto w = load_weight_csv(args.weights_path);
    result = empirical_fairness(alg, w, nullptr, AnalyzeParams{args.m, args.alpha},
                                args.trials, PrngStream(args.seed));
  }
  std::cout << fairness_to_json(result, alg) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Committee selection toolkit: fair sortition with deterministic "
               "decentralization guarantees"};
  app.require_subcommand(1);

  CommonArgs args;

  auto* select = app.add_subcommand("select", "Draw one committee and print it as JSON");
  select->add_option("--algorithm", args.algorithm, "stitch|crs|wrs|rec")->required();
  select->add_option("--weights", args.weights_path, "CSV file (header id,weight)")->required();
  select->add_option("--size", args.m, "committee size M")->required();
  select->add_option("--seed", args.seed, "64-bit PRNG seed")->required();
  select->add_option("--alpha", args.alpha, "stake-fraction cutoff (wrs)");
  select->add_flag("--permute", args.permute, "shuffle interval layout first (stitch)");
  select->add_option("--max-rounds", args.max_rounds, "rejection-sampling budget");

  auto* analyze = app.add_subcommand("analyze", "Print the decentralization report as JSON");
  analyze->add_option("--algorithm", args.algorithm, "stitch|crs|wrs|rec")->required();
  analyze->add_option("--weights", args.weights_path, "CSV file (header id,weight)")->required();
  analyze->add_option("--size", args.m, "committee size M")->required();
  analyze->add_option("--alpha", args.alpha, "stake-fraction cutoff (wrs)");

  auto* fairness = app.add_subcommand("fairness", "Monte Carlo fairness check as JSON");
  fairness->add_option("--algorithm", args.algorithm, "stitch|crs|wrs|rec")->required();
  fairness->add_option("--weights", args.weights_path, "CSV file (header id,weight)")->required();
  fairness->add_option("--size", args.m, "committee size M")->required();
  fairness->add_option("--seed", args.seed, "64-bit PRNG seed")->required();
  fairness->add_option("--trials", args.trials, "number of selections (>= 1000)")->required();
  fairness->add_option("--alpha", args.alpha, "stake-fraction cutoff (wrs)");

  auto* experiment = app.add_subcommand("experiment", "Parameter sweeps as CSV");
  experiment->require_subcommand(1);
  std::uint32_t exp_n = 1000;
  std::uint32_t exp_m = 20;
  double exp_s = 0.5;
  std::vector<double> s_grid;
  std::vector<double> alpha_grid;

  auto* mmax_cmd = experiment->add_subcommand("mmax", "Largest feasible committee size per s");
  mmax_cmd->add_option("--n", exp_n, "population size")->required();
  mmax_cmd->add_option("--grid", s_grid, "s values (default 0,0.1,...,2)");

  auto* ls_cmd = experiment->add_subcommand("lambda-s", "Decentralization per s");
  ls_cmd->add_option("--n", exp_n, "population size")->required();
  ls_cmd->add_option("--m", exp_m, "committee size")->required();
  ls_cmd->add_option("--grid", s_grid, "s values (default 0,0.1,...,2)");
  ls_cmd->add_option("--alpha-grid", alpha_grid, "alphas scanned for wrs (default 0.05..0.95)");

  auto* la_cmd = experiment->add_subcommand("lambda-alpha", "wrs decentralization per alpha");
  la_cmd->add_option("--n", exp_n, "population size")->required();
  la_cmd->add_option("--m", exp_m, "committee size")->required();
  la_cmd->add_option("--s", exp_s, "stake profile exponent")->required();
  la_cmd->add_option("--grid", alpha_grid, "alpha values (default 0.05..0.95)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (select->parsed()) return run_select(args);
    if (analyze->parsed()) return run_analyze(args);
    if (fairness->parsed()) return run_fairness(args);
    if (experiment->parsed()) {
      if (s_grid.empty()) s_grid = sortition::default_s_grid();
      if (alpha_grid.empty()) alpha_grid = sortition::default_alpha_grid();
      if (mmax_cmd->parsed()) {
        std::cout << mmax_csv(sweep_m_max(exp_n, s_grid));
      } else if (ls_cmd->parsed()) {
        std::cout << lambda_s_csv(sweep_lambda_vs_s(exp_n, exp_m, s_grid, alpha_grid));
      } else if (la_cmd->parsed()) {
        std::cout << lambda_alpha_csv(sweep_lambda_vs_alpha(exp_n, exp_m, exp_s, alpha_grid));
      }
      return 0;
    }
  } catch (const FeasibilityError& e) {
    std::cerr << "infeasible configuration: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
