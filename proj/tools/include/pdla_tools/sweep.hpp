#pragma once

// Experiment grid over arrival distributions, robustness parameters and
// replacement rates for TCP acknowledgement.
//
// Seed schedule: trial `k` of distribution `D` uses the instance seed
// hash_seed({base_seed, index(D), k}); the instance is drawn from stream 0
// and the noise for replacement rate index `i` from stream 1 + i. Every
// lambda sees the same instance and prediction, so lambda = 1 is exactly
// flat in p and lambdas are compared on identical inputs.
//
// Row CSV columns:
//   problem,dist,lambda,replacement_rate,trial,seed,alg_cost,opt_cost,
//   pred_cost,ratio,consistency_bound,robustness_bound,all_checks_ok
// Aggregate CSV columns:
//   problem,dist,lambda,replacement_rate,trials,mean_ratio,max_ratio,
//   all_checks_ok
// Rows are ordered by distribution, lambda, replacement rate, trial. Floats
// use 12 significant digits.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "pdla/instancegen.hpp"

namespace pdla::tools {

struct SweepSpec {
  std::string problem = "tcp";
  std::vector<DistributionSpec> dists = {DistributionSpec::poisson(),
                                         DistributionSpec::lomax(),
                                         DistributionSpec::iterated_poisson()};
  std::vector<double> lambdas = {1.0, 0.8, 0.6, 0.4};
  std::vector<double> replacement_rates = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5,
                                           0.6, 0.7, 0.8, 0.9, 1.0};
  int trials = 10;
  std::size_t length = 1000;
  std::int64_t d = 100;
  std::uint64_t base_seed = 0;
  /// 0 means: PDLA_THREADS if set, else the hardware concurrency.
  unsigned threads = 0;

  void validate() const;
};

struct SweepRow {
  std::string problem;
  std::string dist;
  double lambda = 0.0;
  double replacement_rate = 0.0;
  int trial = 0;
  std::uint64_t seed = 0;
  double alg_cost = 0.0;
  double opt_cost = 0.0;
  double pred_cost = 0.0;
  double ratio = 0.0;
  double consistency_bound = 0.0;
  double robustness_bound = 0.0;
  bool all_checks_ok = true;
};

struct AggregateRow {
  std::string problem;
  std::string dist;
  double lambda = 0.0;
  double replacement_rate = 0.0;
  int trials = 0;
  double mean_ratio = 0.0;
  double max_ratio = 0.0;
  bool all_checks_ok = true;
};

std::uint64_t sweep_instance_seed(std::uint64_t base_seed,
                                  const DistributionSpec& dist, int trial);

std::vector<SweepRow> run_sweep(const SweepSpec& spec);

std::vector<AggregateRow> aggregate(const std::vector<SweepRow>& rows);

void write_rows_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void write_aggregate_csv(std::ostream& out, const std::vector<AggregateRow>& rows);

/// Worker count from PDLA_THREADS, else the hardware concurrency (>= 1).
unsigned default_thread_count();

}  // namespace pdla::tools
