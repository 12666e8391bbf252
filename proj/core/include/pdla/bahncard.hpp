#pragma once

// Bahncard problem: a discount card costs B, is valid for trips in
// [t, t + T] and reduces each ticket from 1 to beta. Prediction-guided
// primal-dual algorithm, dual and bound checks, exact offline optimum and
// threshold rounding.

#include <cstdint>
#include <vector>

#include "pdla/core.hpp"

namespace pdla {

using TimeStep = std::int64_t;

struct BahncardInstance {
  std::vector<TimeStep> trips;  ///< nondecreasing trip times
  double B = 1.0;
  double beta = 0.0;
  TimeStep T = 1;

  /// Throws DomainError unless trips are sorted, B > 0, 0 <= beta < 1 and
  /// T >= 1.
  void validate() const;
};

struct BahncardPrediction {
  std::vector<TimeStep> cards;
};

/// Sorts and deduplicates the advised buy times, then postpones any buy
/// that falls inside the validity window of the previous card to the first
/// step after that window, so the intervals [t_i, t_i + T] are disjoint.
/// `moved`, if given, receives the number of buys that were postponed.
BahncardPrediction normalize_bahncard_prediction(const BahncardPrediction& p,
                                                 TimeStep T,
                                                 std::size_t* moved = nullptr);

enum class BahncardUpdate { minimal, big, small };

struct BahncardTripRecord {
  TimeStep time = 0;
  BahncardUpdate kind = BahncardUpdate::minimal;
  double window_sum = 0.0;  ///< before the update
  double d = 0.0;
  double f = 0.0;
  double c = 0.0;
  double b = 0.0;
  double delta_primal = 0.0;
  /// Index of the (normalized) predicted interval containing the trip, or -1.
  std::int64_t interval = -1;
  /// Cumulative card mass strictly before the trip's window, and right after
  /// the trip was processed. Used by the rounding.
  double mass_before_window = 0.0;
  double mass_after = 0.0;
};

struct BahncardRun {
  double lambda = 1.0;
  /// Distinct trip times; x is indexed by position in this vector.
  std::vector<TimeStep> times;
  MonotoneVarStore x;
  std::vector<BahncardTripRecord> trips;
  BahncardPrediction prediction;  ///< normalized
  /// Primal increase per predicted interval and number of trips inside it.
  std::vector<double> interval_cost;
  std::vector<std::int64_t> interval_trips;
  CostLedger ledger;

  double cost() const { return ledger.primal_total(); }
};

/// e(z) = (1 + (1-beta)/B)^(z B/(1-beta)).
double bahncard_exp(double z, double B, double beta);

/// (e(z) - beta)/(e(z) - 1), the primal increase of a non-minimal update.
double bahncard_update_cost(double z, double B, double beta);

BahncardRun run_pdla_bahncard(const BahncardInstance& instance,
                              const BahncardPrediction& prediction,
                              double lambda, const EpsilonPolicy& eps = {},
                              bool keep_history = false);

struct BahncardDualCheck {
  /// Largest window sum of b divided by B.
  double scale_needed = 0.0;
  double max_window_sum = 0.0;
  bool ok = true;
};

BahncardDualCheck check_bahncard_dual(const BahncardRun& run,
                                      const BahncardInstance& instance,
                                      double eps = 1e-9);

struct BahncardOptimum {
  double cost = 0.0;
  std::vector<TimeStep> card_times;
};

inline constexpr std::size_t kMaxBahncardDpTrips = 10'000;
inline constexpr std::size_t kMaxBahncardBruteTrips = 12;

/// Exact optimum by dynamic programming over trips (cards are bought only at
/// trip times).
BahncardOptimum offline_opt_bahncard(const BahncardInstance& instance);

/// Exhaustive search over all subsets of trip times as buy times.
double brute_force_bahncard(const BahncardInstance& instance);

struct BahncardPredictionCost {
  double s_cost = 0.0;
  std::int64_t uncovered_trips = 0;
};

/// Cost of following the normalized prediction: B + beta m_i per card and
/// 1 for every trip outside all validity intervals.
BahncardPredictionCost prediction_cost_bahncard(
    const BahncardInstance& instance, const BahncardPrediction& prediction);

struct BahncardBounds {
  double consistency_bound = 0.0;
  double robustness_bound = 0.0;
  double s_cost = 0.0;
  double opt = 0.0;
  /// ceil(lambda B/(1-beta)) / (B + beta ceil(...)) * (e(lambda)-beta)/(e(lambda)-1)
  double interval_ratio = 0.0;
};

/// Finite-B bounds: per-interval ratio times what the prediction pays on the
/// interval, plus the small-update cost per uncovered trip; robustness uses
/// the dual scaling 1 + (1-beta)/B.
BahncardBounds bahncard_bounds(const BahncardInstance& instance,
                               const BahncardPrediction& prediction,
                               double lambda);

/// Threshold rounding with p uniform on (0, 1]. A trip pays beta iff a card
/// was bought within its window by the time it was processed.
double round_bahncard(const BahncardRun& run, const BahncardInstance& instance,
                      SeededRng& rng);

}  // namespace pdla
