#pragma once

// Runs one algorithm on one instance and evaluates every applicable
// feasibility, dual and bound check on the result.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdla/bahncard.hpp"
#include "pdla/core.hpp"
#include "pdla/setcover.hpp"
#include "pdla/skirental.hpp"
#include "pdla/tcpack.hpp"

namespace pdla::tools {

/// Relative slack for "cost <= bound" comparisons.
inline constexpr double kBoundTolerance = 1e-9;

bool within(double value, double bound, double rel = kBoundTolerance);

struct RunReport {
  std::string problem;
  double lambda = 1.0;
  double alg_cost = 0.0;
  double dual_cost = 0.0;
  /// NaN when no oracle was run.
  double opt_cost = 0.0;
  double pred_cost = 0.0;
  double ratio = 0.0;
  /// +infinity when the problem has no finite bound for this input.
  double consistency_bound = 0.0;
  double robustness_bound = 0.0;
  std::optional<double> rounded_cost;
  std::vector<std::pair<std::string, bool>> checks;

  void add_check(std::string name, bool ok) {
    checks.emplace_back(std::move(name), ok);
  }
  bool all_checks_ok() const;
  std::string to_json() const;
};

/// alg / opt, with 0/0 read as 1.
double competitive_ratio(double alg, double opt);

RunReport evaluate_setcover(const CoverInstance& instance,
                            const CoverPrediction& prediction, double lambda,
                            const EpsilonPolicy& eps = {});
RunReport evaluate_ski(const SkiInstance& instance,
                       const SkiPrediction& prediction, double lambda,
                       const EpsilonPolicy& eps = {});
RunReport evaluate_bahncard(const BahncardInstance& instance,
                            const BahncardPrediction& prediction, double lambda,
                            const EpsilonPolicy& eps = {});
/// `opt` may be supplied to avoid recomputing the offline optimum.
RunReport evaluate_tcp(const TcpInstance& instance,
                       const TcpPrediction& prediction, double lambda,
                       std::optional<double> opt = std::nullopt,
                       const EpsilonPolicy& eps = {});

}  // namespace pdla::tools
