#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pdla/instancegen.hpp"
#include "pdla_tools/commands.hpp"

using namespace pdla::tools;

int main(int argc, char** argv) {
  CLI::App app{"Primal-dual online covering with predictions"};
  app.require_subcommand(1);

  RunOptions run;
  double run_lambda = 0.0;
  std::uint64_t run_seed = 0;
  auto* run_cmd = app.add_subcommand("run", "Run one instance and print a JSON report");
  run_cmd->add_option("--problem", run.problem, "setcover, ski, bahncard or tcp")
      ->required()
      ->check(CLI::IsMember({"setcover", "ski", "bahncard", "tcp"}));
  run_cmd->add_option("--instance", run.instance_path, "Instance JSON file")->required();
  run_cmd->add_option("--prediction", run.prediction_path, "Prediction JSON file");
  auto* lambda_opt = run_cmd->add_option("--lambda", run_lambda, "Trust parameter in (0, 1]");
  auto* seed_opt = run_cmd->add_option("--seed", run_seed, "Seed for one rounded solution");

  SweepOptions sweep;
  std::string sweep_dist = "all";
  auto* sweep_cmd = app.add_subcommand("sweep", "Run the TCP experiment grid to CSV");
  sweep_cmd->add_option("--dist", sweep_dist, "poisson, pareto, iterated-poisson or all")
      ->check(CLI::IsMember({"poisson", "pareto", "iterated-poisson", "all"}));
  sweep_cmd->add_option("--length", sweep.spec.length, "Steps per instance");
  sweep_cmd->add_option("--d", sweep.spec.d, "Per-step latency divisor");
  sweep_cmd->add_option("--seed", sweep.spec.base_seed, "Base seed");
  sweep_cmd->add_option("--trials", sweep.spec.trials, "Trials per cell");
  sweep_cmd->add_option("--lambdas", sweep.spec.lambdas, "Trust parameters")
      ->delimiter(',');
  sweep_cmd->add_option("--rates", sweep.spec.replacement_rates, "Replacement rates")
      ->delimiter(',');
  sweep_cmd->add_option("--threads", sweep.spec.threads,
                        "Worker threads (default PDLA_THREADS or all cores)");
  sweep_cmd->add_option("--out", sweep.out_path, "Row CSV (default stdout)");
  sweep_cmd->add_option("--aggregate-out", sweep.aggregate_out_path,
                        "Per-cell mean ratio CSV");

  std::string scope = "all";
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suites");
  verify_cmd->add_option("--scope", scope, "lemmas, certificates, oracles, duals or all")
      ->check(CLI::IsMember({"lemmas", "certificates", "oracles", "duals", "all"}));

  GenerateOptions gen;
  auto* gen_cmd = app.add_subcommand("generate", "Draw a TCP instance and its prediction");
  gen_cmd->add_option("--dist", gen.dist, "poisson, pareto or iterated-poisson")
      ->check(CLI::IsMember({"poisson", "pareto", "iterated-poisson"}));
  gen_cmd->add_option("--length", gen.length, "Steps");
  gen_cmd->add_option("--d", gen.d, "Per-step latency divisor");
  gen_cmd->add_option("--seed", gen.seed, "Seed");
  gen_cmd->add_option("--replacement-rate", gen.replacement_rate, "Noise rate in [0, 1]");
  gen_cmd->add_option("--instance-out", gen.instance_out, "Instance JSON file");
  gen_cmd->add_option("--prediction-out", gen.prediction_out, "Prediction JSON file");

  CLI11_PARSE(app, argc, argv);

  if (*run_cmd) {
    if (*lambda_opt) run.lambda = run_lambda;
    if (*seed_opt) run.seed = run_seed;
    return cmd_run(run, std::cout, std::cerr);
  }
  if (*sweep_cmd) {
    if (sweep_dist != "all") sweep.spec.dists = {pdla::parse_distribution(sweep_dist)};
    return cmd_sweep(sweep, std::cout, std::cerr);
  }
  if (*verify_cmd) return cmd_verify(scope, std::cout, std::cerr);
  return cmd_generate(gen, std::cout, std::cerr);
}
