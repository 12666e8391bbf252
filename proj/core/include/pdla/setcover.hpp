#pragma once

// Online fractional weighted set cover: the pure online multiplicative-update
// baseline and its prediction-guided variant (which also tolerates advice
// that leaves some elements uncovered).

#include <cstddef>
#include <vector>

#include "pdla/core.hpp"

namespace pdla {

using ElementId = std::size_t;
using SetId = std::size_t;

struct WeightedSet {
  double weight = 1.0;
  std::vector<ElementId> elements;
};

struct CoverInstance {
  std::size_t n = 0;
  std::vector<WeightedSet> sets;
  std::vector<ElementId> arrivals;

  /// Throws DomainError on weights < 1 or element ids >= n.
  void validate() const;
  /// F(e): the sets containing each element, indexed by element id.
  std::vector<std::vector<SetId>> sets_by_element() const;
  /// Maximum |F(e)| over arrived elements (0 when nothing arrives).
  std::size_t max_degree() const;
};

struct CoverPrediction {
  std::vector<SetId> sets;
};

/// One pass of the inner while-loop for one arrival.
struct CoverIteration {
  ElementId element = 0;
  bool covered_by_prediction = false;
  double sum_before = 0.0;
  double primal_increase = 0.0;
  /// Increase due to sets in F(e) and in the prediction.
  double predicted_part = 0.0;
  /// Increase due to sets in F(e) outside the prediction.
  double unpredicted_part = 0.0;
};

struct CoverRun {
  MonotoneVarStore x;
  std::vector<double> y;
  CostLedger ledger;
  /// Primal cost spent on elements the prediction does not cover.
  double cost_uncovered_part = 0.0;
  std::vector<CoverIteration> iterations;
  std::size_t max_degree = 0;

  double primal_cost(const CoverInstance& instance) const;
};

/// Prediction-guided primal-dual. Elements covered by the advice get the
/// lambda-mixed update; elements it misses fall back to the online rule.
/// Throws InfeasibleError if an arrived element belongs to no set.
CoverRun run_pdla_setcover(const CoverInstance& instance,
                           const CoverPrediction& prediction, double lambda,
                           const EpsilonPolicy& eps = {},
                           bool keep_history = false);

/// Online primal-dual without advice.
CoverRun run_pure_online_setcover(const CoverInstance& instance,
                                  const EpsilonPolicy& eps = {},
                                  bool keep_history = false);

struct CoverDualCheck {
  /// max over sets of (sum of y_e over e in S) / w_S.
  double max_violation_factor = 0.0;
  /// log2(3 d / lambda + 1).
  double bound = 0.0;
  bool ok = true;
};

CoverDualCheck check_cover_dual_feasibility(const CoverRun& run,
                                            const CoverInstance& instance,
                                            double lambda,
                                            double eps = 1e-9);

struct CoverPredictionCost {
  double s_cost = 0.0;
  bool is_feasible = true;
};

/// Weight of the advised sets that touch at least one arrived element, and
/// whether the advice covers every arrival.
CoverPredictionCost prediction_cost_setcover(const CoverInstance& instance,
                                             const CoverPrediction& prediction);

struct CoverOptimum {
  double cost = 0.0;
  std::vector<SetId> witness;
};

inline constexpr std::size_t kMaxBruteForceSets = 24;

/// Minimum-weight integral cover of the arrived elements by branch and bound.
/// Throws SizeError above kMaxBruteForceSets sets, InfeasibleError if no cover
/// exists.
CoverOptimum offline_opt_setcover_brute(const CoverInstance& instance);

}  // namespace pdla
