#include "pdla/bahncard.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pdla {

void BahncardInstance::validate() const {
  if (!std::is_sorted(trips.begin(), trips.end())) {
    throw DomainError("bahncard: trip times must be nondecreasing");
  }
  if (!(B > 0.0) || !std::isfinite(B)) {
    throw DomainError("bahncard: B must be finite and > 0");
  }
  if (beta == 1.0) {
    throw DomainError("bahncard: beta = 1 makes every update vanish");
  }
  if (!(beta >= 0.0 && beta < 1.0)) {
    throw DomainError("bahncard: beta must lie in [0, 1)");
  }
  if (T < 1) throw DomainError("bahncard: T must be >= 1");
}

BahncardPrediction normalize_bahncard_prediction(const BahncardPrediction& p,
                                                 TimeStep T,
                                                 std::size_t* moved) {
  std::vector<TimeStep> cards = p.cards;
  std::sort(cards.begin(), cards.end());
  cards.erase(std::unique(cards.begin(), cards.end()), cards.end());
  BahncardPrediction out;
  std::size_t count = 0;
  for (TimeStep t : cards) {
    if (!out.cards.empty() && t <= out.cards.back() + T) {
      t = out.cards.back() + T + 1;
      ++count;
    }
    out.cards.push_back(t);
  }
  if (moved != nullptr) *moved = count;
  return out;
}

double bahncard_exp(double z, double B, double beta) {
  return discrete_exp(z, B / (1.0 - beta));
}

double bahncard_update_cost(double z, double B, double beta) {
  const double e = bahncard_exp(z, B, beta);
  return (e - beta) / (e - 1.0);
}

namespace {

// Index of the interval [c, c + T] containing t, or -1.
std::int64_t interval_of(const std::vector<TimeStep>& cards, TimeStep T,
                         TimeStep t) {
  auto it = std::upper_bound(cards.begin(), cards.end(), t);
  if (it == cards.begin()) return -1;
  --it;
  if (t <= *it + T) return it - cards.begin();
  return -1;
}

}  // namespace

BahncardRun run_pdla_bahncard(const BahncardInstance& instance,
                              const BahncardPrediction& prediction,
                              double lambda, const EpsilonPolicy& eps,
                              bool keep_history) {
  require_lambda(lambda);
  instance.validate();
  const double B = instance.B;
  const double beta = instance.beta;
  const double step = (1.0 - beta) / B;
  const double c_big = bahncard_exp(lambda, B, beta);
  const double c_small = bahncard_exp(1.0 / lambda, B, beta);

  BahncardRun run{lambda, {}, MonotoneVarStore(keep_history), {}, {}, {}, {}, {}};
  run.prediction = normalize_bahncard_prediction(prediction, instance.T);
  run.interval_cost.assign(run.prediction.cards.size(), 0.0);
  run.interval_trips.assign(run.prediction.cards.size(), 0);
  run.trips.reserve(instance.trips.size());

  std::vector<double> cum;  // cum[k] = x over times[0..k]
  for (TimeStep t : instance.trips) {
    if (run.times.empty() || run.times.back() != t) {
      run.times.push_back(t);
      cum.push_back(cum.empty() ? 0.0 : cum.back());
    }
    const std::size_t here = run.times.size() - 1;
    const auto first = static_cast<std::size_t>(
        std::lower_bound(run.times.begin(), run.times.end(), t - instance.T) -
        run.times.begin());
    const double before = first == 0 ? 0.0 : cum[first - 1];

    BahncardTripRecord rec;
    rec.time = t;
    rec.mass_before_window = before;
    rec.window_sum = cum.back() - before;
    rec.interval = interval_of(run.prediction.cards, instance.T, t);
    const double w = rec.window_sum;

    if (w >= 1.0 - eps.coverage_eps) {
      rec.kind = BahncardUpdate::minimal;
      rec.d = 1.0;
      rec.c = beta;
      rec.delta_primal = beta;
    } else {
      const bool big = rec.interval >= 0;
      const double c = big ? c_big : c_small;
      rec.kind = big ? BahncardUpdate::big : BahncardUpdate::small;
      rec.d = w;
      rec.f = 1.0 - w;
      const double dx = step * (w + 1.0 / (c - 1.0));
      run.x.add(here, dx);
      cum.back() += dx;
      rec.b = big ? 1.0 - beta : lambda * (1.0 - beta);
      rec.c = rec.b + beta;
      rec.delta_primal = B * dx + beta * rec.d + rec.f;
    }
    rec.mass_after = cum.back();

    if (rec.interval >= 0) {
      run.ledger.charge_prediction(rec.delta_primal);
      run.interval_cost[static_cast<std::size_t>(rec.interval)] += rec.delta_primal;
      ++run.interval_trips[static_cast<std::size_t>(rec.interval)];
    } else {
      run.ledger.charge_other(rec.delta_primal);
    }
    run.ledger.add_dual(rec.c);
    run.trips.push_back(rec);
  }
  return run;
}

BahncardDualCheck check_bahncard_dual(const BahncardRun& run,
                                      const BahncardInstance& instance,
                                      double eps) {
  BahncardDualCheck check;
  for (const auto& r : run.trips) {
    if (r.c > 1.0 + eps || r.c - r.b > instance.beta + eps || r.b < 0.0 ||
        r.c < 0.0) {
      check.ok = false;
    }
  }
  // Constraint at time t sums b_j over trips with t <= t(j) <= t + T; the
  // maximum is attained with t at a trip time.
  double window = 0.0;
  std::size_t hi = 0;
  const auto& trips = run.trips;
  for (std::size_t lo = 0; lo < trips.size(); ++lo) {
    if (lo > 0) window -= trips[lo - 1].b;
    if (hi < lo) {
      hi = lo;
      window = 0.0;
    }
    while (hi < trips.size() && trips[hi].time <= trips[lo].time + instance.T) {
      window += trips[hi].b;
      ++hi;
    }
    check.max_window_sum = std::max(check.max_window_sum, window);
  }
  check.scale_needed = check.max_window_sum / instance.B;
  if (check.max_window_sum > instance.B + (1.0 - instance.beta) + eps) {
    check.ok = false;
  }
  return check;
}

namespace {

// next[i] = first trip index with time > trips[i] + T.
std::vector<std::size_t> next_uncovered(const BahncardInstance& instance) {
  const auto& trips = instance.trips;
  std::vector<std::size_t> next(trips.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < trips.size(); ++i) {
    k = std::max(k, i);
    while (k < trips.size() && trips[k] <= trips[i] + instance.T) ++k;
    next[i] = k;
  }
  return next;
}

}  // namespace

BahncardOptimum offline_opt_bahncard(const BahncardInstance& instance) {
  instance.validate();
  const std::size_t n = instance.trips.size();
  if (n > kMaxBahncardDpTrips) {
    std::ostringstream os;
    os << "bahncard DP supports at most " << kMaxBahncardDpTrips
       << " trips, got " << n;
    throw SizeError(os.str());
  }
  const auto next = next_uncovered(instance);
  std::vector<double> opt(n + 1, 0.0);
  std::vector<char> buy(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    const double pay = 1.0 + opt[i + 1];
    const double card = instance.B +
                        instance.beta * static_cast<double>(next[i] - i) +
                        opt[next[i]];
    if (card < pay) {
      opt[i] = card;
      buy[i] = 1;
    } else {
      opt[i] = pay;
    }
  }
  BahncardOptimum result;
  result.cost = opt[0];
  for (std::size_t i = 0; i < n;) {
    if (buy[i]) {
      result.card_times.push_back(instance.trips[i]);
      i = next[i];
    } else {
      ++i;
    }
  }
  return result;
}

double brute_force_bahncard(const BahncardInstance& instance) {
  instance.validate();
  const auto& trips = instance.trips;
  if (trips.size() > kMaxBahncardBruteTrips) {
    std::ostringstream os;
    os << "bahncard brute force supports at most " << kMaxBahncardBruteTrips
       << " trips, got " << trips.size();
    throw SizeError(os.str());
  }
  std::vector<TimeStep> times = trips;
  times.erase(std::unique(times.begin(), times.end()), times.end());
  const std::size_t k = times.size();
  double best = kInfinity;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    double cost = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1U) cost += instance.B;
    }
    for (TimeStep t : trips) {
      bool discounted = false;
      for (std::size_t i = 0; i < k && !discounted; ++i) {
        discounted = (mask >> i & 1U) && times[i] <= t && t <= times[i] + instance.T;
      }
      cost += discounted ? instance.beta : 1.0;
    }
    best = std::min(best, cost);
  }
  return trips.empty() ? 0.0 : best;
}

BahncardPredictionCost prediction_cost_bahncard(
    const BahncardInstance& instance, const BahncardPrediction& prediction) {
  instance.validate();
  const auto normalized =
      normalize_bahncard_prediction(prediction, instance.T);
  BahncardPredictionCost result;
  result.s_cost = instance.B * static_cast<double>(normalized.cards.size());
  for (TimeStep t : instance.trips) {
    if (interval_of(normalized.cards, instance.T, t) >= 0) {
      result.s_cost += instance.beta;
    } else {
      result.s_cost += 1.0;
      ++result.uncovered_trips;
    }
  }
  return result;
}

BahncardBounds bahncard_bounds(const BahncardInstance& instance,
                               const BahncardPrediction& prediction,
                               double lambda) {
  require_lambda(lambda);
  instance.validate();
  const double B = instance.B;
  const double beta = instance.beta;
  const auto normalized =
      normalize_bahncard_prediction(prediction, instance.T);
  const auto cost = prediction_cost_bahncard(instance, normalized);

  const double big_cost = bahncard_update_cost(lambda, B, beta);
  const double small_cost = bahncard_update_cost(1.0 / lambda, B, beta);
  const double k = static_cast<double>(ceil_count(lambda * B / (1.0 - beta)));

  BahncardBounds r;
  r.s_cost = cost.s_cost;
  r.opt = offline_opt_bahncard(instance).cost;
  r.interval_ratio = k / (B + beta * k) * big_cost;
  const double covered_cost =
      cost.s_cost - static_cast<double>(cost.uncovered_trips);
  r.consistency_bound = r.interval_ratio * covered_cost +
                        small_cost * static_cast<double>(cost.uncovered_trips);
  r.robustness_bound = big_cost * (1.0 + (1.0 - beta) / B) * r.opt;
  return r;
}

double round_bahncard(const BahncardRun& run, const BahncardInstance& instance,
                      SeededRng& rng) {
  const double p = 1.0 - rng.uniform01();
  // Number of integers k with a < p + k <= b.
  auto crossings = [p](double a, double b) {
    return std::floor(b - p) - std::floor(a - p);
  };
  double cost = 0.0;
  for (const auto& r : run.trips) {
    cost += crossings(r.mass_before_window, r.mass_after) > 0.0 ? instance.beta
                                                                 : 1.0;
  }
  const double total = run.trips.empty() ? 0.0 : run.trips.back().mass_after;
  cost += instance.B * crossings(0.0, total);
  return cost;
}

}  // namespace pdla
