#pragma once

// Ski rental as a covering LP: pure online primal-dual, the
// prediction-guided variant, threshold rounding, bound checks and a numeric
// verifier for the optimality certificate of the consistency/robustness
// trade-off.

#include <cstdint>
#include <vector>

#include "pdla/core.hpp"

namespace pdla {

struct SkiInstance {
  std::int64_t N = 0;  ///< true number of vacation days
  std::int64_t B = 1;  ///< cost of buying

  void validate() const;
};

struct SkiPrediction {
  std::int64_t n_pred = 0;
};

struct SkiRun {
  std::int64_t B = 1;
  double lambda = 1.0;
  /// True when the prediction says "buy" (n_pred >= B).
  bool buy_branch = true;
  double c = 0.0;
  double c_prime = 0.0;
  /// Final buy variable.
  double x = 0.0;
  /// x_after[j] is x at the end of day j; x_after[0] = 0. Size N + 1.
  std::vector<double> x_after;
  /// Rent variables and duals, indexed by day 1..N (index 0 unused).
  std::vector<double> f;
  std::vector<double> y;
  std::int64_t updates = 0;
  CostLedger ledger;

  double cost() const { return ledger.primal_total(); }
};

/// Online primal-dual without advice: c = e(1), c' = 1.
SkiRun run_online_ski(const SkiInstance& instance, const EpsilonPolicy& eps = {});

SkiRun run_pdla_ski(const SkiInstance& instance, const SkiPrediction& prediction,
                    double lambda, const EpsilonPolicy& eps = {});

struct SkiBounds {
  double consistency_bound = 0.0;
  double robustness_bound = 0.0;
  double s_cost = 0.0;
  double opt = 0.0;
  /// lambda/(1-e(-lambda)) * s_cost, without the ceiling correction.
  double plain_consistency_bound = 0.0;
  /// opt/(1-e(-lambda)), without the dual-scaling correction.
  double plain_robustness_bound = 0.0;
  /// Largest number of updates the algorithm may perform.
  std::int64_t max_updates = 0;
};

/// Bounds with e(z) = (1+1/B)^(zB). When lambda*B and B/lambda are integers
/// the corrected and plain bounds coincide; otherwise the corrected ones
/// account for the ceil(lambda B) big updates and the ceil(B/lambda) small
/// updates the dual budget allows.
SkiBounds ski_bounds(const SkiInstance& instance, const SkiPrediction& prediction,
                     double lambda);

struct SkiDualCheck {
  double dual_sum = 0.0;
  double bound = 0.0;  ///< B + c'
  bool ok = true;
};

SkiDualCheck check_ski_dual(const SkiRun& run, double eps = 1e-9);

/// B min(x_N, 1) plus the tight rent terms (1 - min(x_j, 1)) for days 1..N.
/// This is the expected cost of round_ski and never exceeds run.cost().
double ski_lp_objective(const SkiRun& run);

/// Draws p uniform on (0, 1]; buys on the day x first reaches p and rents on
/// every earlier day. Returns the realized cost.
double round_ski(const SkiRun& run, SeededRng& rng);

struct LowerBoundCertificate {
  double lambda = 0.0;
  double K = 0.0;
  std::int64_t grid_points = 0;
  double max_constraint_violation = 0.0;
  /// Trapezoid estimate of the integral of t * lambda_t over [0, 1].
  double first_constraint_integral = 0.0;
  double dual_objective = 0.0;
};

/// Checks the dual solution lambda_t = K e^-t [t <= lambda], lambda_d = K,
/// lambda_c = K e^-lambda against the adversary's dual constraints on a
/// uniform grid of [0, 1] (with lambda added as a node), using the composite
/// trapezoid rule. Trapezoid error is O(1/grid_points^2).
LowerBoundCertificate verify_lower_bound_certificate(double lambda,
                                                     std::int64_t grid_points);

}  // namespace pdla
