#pragma once

// Dynamic TCP acknowledgement: packets arrive at integer steps, each step of
// delay costs 1/d per pending packet and each ack costs 1. Online and
// prediction-guided primal-dual algorithms, dual and bound checks, the
// quadratic offline optimum and threshold rounding.

#include <cstdint>
#include <limits>
#include <vector>

#include "pdla/core.hpp"

namespace pdla {

using TimeStep = std::int64_t;

inline constexpr TimeStep kNoAck = std::numeric_limits<TimeStep>::max();

struct TcpInstance {
  std::vector<std::int64_t> counts;  ///< packets arriving at each step
  std::int64_t d = 100;

  void validate() const;
  TimeStep horizon() const { return static_cast<TimeStep>(counts.size()); }
  std::int64_t packet_count() const;
};

struct TcpPrediction {
  std::vector<TimeStep> acks;  ///< strictly increasing

  void validate() const;
};

/// Smallest ack time >= t, or kNoAck.
TimeStep alpha(const TcpPrediction& prediction, TimeStep t);

struct TcpUpdate {
  std::size_t packet = 0;
  TimeStep t = 0;
  bool big = false;
  double coverage_before = 0.0;
  double f = 0.0;
  double y = 0.0;
  double delta_primal = 0.0;
};

struct TcpRun {
  double lambda = 1.0;
  std::int64_t d = 1;
  /// Arrival step of each packet, in arrival order.
  std::vector<TimeStep> arrivals;
  MonotoneVarStore x;
  std::vector<TcpUpdate> updates;
  std::int64_t big_updates = 0;
  std::int64_t small_updates = 0;
  /// Big updates attributed to each predicted ack (indexed like the
  /// prediction's ack list).
  std::vector<std::int64_t> big_updates_per_ack;
  /// Number of steps processed (the last step is steps - 1).
  TimeStep steps = 0;
  CostLedger ledger;

  double cost() const { return ledger.primal_total(); }
};

/// Online primal-dual without advice: c = e(1), y = 1/d.
TcpRun run_online_tcp(const TcpInstance& instance, const EpsilonPolicy& eps = {},
                      bool keep_history = false);

/// Updates for packet j at step t are big (c = e(lambda), y = 1/d) once the
/// prediction has acked j, small (c = e(1/lambda), y = lambda/d) before.
/// Within a step packets are visited in arrival order, each at most once,
/// and coverage is re-evaluated after every update.
TcpRun run_pdla_tcp(const TcpInstance& instance, const TcpPrediction& prediction,
                    double lambda, const EpsilonPolicy& eps = {},
                    bool keep_history = false);

/// Objective of the final fractional solution with the tight rent terms:
/// sum of x plus (1/d) sum over packets and steps of (1 - coverage)^+.
/// This is the expected cost of round_tcp and never exceeds run.cost().
double tcp_lp_objective(const TcpRun& run);

struct TcpDualCheck {
  double scale_needed = 0.0;
  bool ok = true;
};

/// Max over t of sum_{j: t(j) <= t} sum_{t' >= t} y_{jt'}; ok iff it is at
/// most 1 + 1/d and every y lies in [0, 1/d].
TcpDualCheck check_tcp_dual(const TcpRun& run, double eps = 1e-9);

struct TcpOptimum {
  double cost = 0.0;
  std::vector<TimeStep> ack_times;
};

inline constexpr std::size_t kMaxTcpDpSteps = 100'000;
inline constexpr std::size_t kMaxTcpBruteSteps = 12;

/// Quadratic DP over distinct arrival steps (optimal schedules ack only at
/// arrival steps).
TcpOptimum offline_opt_tcp(const TcpInstance& instance);

/// Exhaustive search over subsets of arrival steps as ack times.
double brute_force_tcp(const TcpInstance& instance);

struct TcpPredictionCost {
  std::int64_t n_acks = 0;
  double latency = 0.0;
  /// n_acks + latency, or +infinity when some packet is never acked.
  double s_cost = 0.0;
  bool covers_all = true;
};

TcpPredictionCost prediction_cost_tcp(const TcpInstance& instance,
                                      const TcpPrediction& prediction);

struct TcpBounds {
  double consistency_bound = 0.0;
  double robustness_bound = 0.0;
  double s_cost = 0.0;
  double opt = 0.0;
};

/// Consistency n_A (ceil(lambda d)/d)/(1-e(-lambda)) + latency/(1-e(-1/lambda)),
/// robustness (1+1/d) opt/(1-e(-lambda)), with e(z) = (1+1/d)^(z d).
TcpBounds tcp_bounds(const TcpInstance& instance, const TcpPrediction& prediction,
                     double lambda, double opt);
TcpBounds tcp_bounds(const TcpInstance& instance, const TcpPrediction& prediction,
                     double lambda);

/// Threshold rounding with p uniform on (0, 1]: ack at step t for every
/// integer k with X_{t-1} < p + k <= X_t where X is the prefix sum of x.
/// Packets pay 1/d per step until the first ack at or after their arrival.
double round_tcp(const TcpRun& run, SeededRng& rng);

}  // namespace pdla
