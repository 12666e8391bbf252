#include "pdla/tcpack.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pdla {

void TcpInstance::validate() const {
  if (d < 1) throw DomainError("tcp: d must be >= 1");
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] < 0) {
      std::ostringstream os;
      os << "tcp: negative packet count at step " << i;
      throw DomainError(os.str());
    }
  }
}

std::int64_t TcpInstance::packet_count() const {
  std::int64_t n = 0;
  for (auto c : counts) n += c;
  return n;
}

void TcpPrediction::validate() const {
  if (!acks.empty() && acks.front() < 0) {
    throw DomainError("tcp: predicted ack times must be nonnegative");
  }
  for (std::size_t i = 1; i < acks.size(); ++i) {
    if (acks[i] <= acks[i - 1]) {
      throw DomainError("tcp: predicted ack times must be strictly increasing");
    }
  }
}

TimeStep alpha(const TcpPrediction& prediction, TimeStep t) {
  auto it = std::lower_bound(prediction.acks.begin(), prediction.acks.end(), t);
  return it == prediction.acks.end() ? kNoAck : *it;
}

namespace {

struct Branch {
  double c;
  double y;
};

TcpRun run_engine(const TcpInstance& instance, const TcpPrediction& prediction,
                  double lambda, const EpsilonPolicy& eps, bool keep_history) {
  instance.validate();
  prediction.validate();
  const double d = static_cast<double>(instance.d);
  const Branch big{discrete_exp(lambda, d), 1.0 / d};
  const Branch small{discrete_exp(1.0 / lambda, d), lambda / d};
  const double big_step = 1.0 / (big.c - 1.0);
  const double small_step = 1.0 / (small.c - 1.0);

  TcpRun run{lambda, instance.d, {}, MonotoneVarStore(keep_history), {}, 0, 0,
             {}, 0, {}};
  run.big_updates_per_ack.assign(prediction.acks.size(), 0);

  const TimeStep horizon = instance.horizon();
  const TimeStep limit =
      horizon + ceil_count(static_cast<double>(instance.d) / lambda) + 2;
  std::vector<double> base;             // prefix of x before the arrival step
  std::vector<TimeStep> packet_alpha;   // alpha(t(j))
  std::vector<std::int64_t> ack_index;  // position of alpha(t(j)) in acks
  double prefix = 0.0;                  // sum of x_k for k <= t
  std::size_t first = 0;                // packets before this are covered

  TimeStep t = 0;
  for (;; ++t) {
    if (t >= horizon && first == run.arrivals.size()) break;
    if (t > limit) throw std::runtime_error("tcp: packets remain uncovered");
    if (t < horizon) {
      const auto k = instance.counts[static_cast<std::size_t>(t)];
      if (k > 0) {
        const TimeStep a = alpha(prediction, t);
        const std::int64_t idx =
            a == kNoAck ? -1
                        : std::lower_bound(prediction.acks.begin(),
                                           prediction.acks.end(), a) -
                              prediction.acks.begin();
        for (std::int64_t i = 0; i < k; ++i) {
          run.arrivals.push_back(t);
          base.push_back(prefix);
          packet_alpha.push_back(a);
          ack_index.push_back(idx);
        }
      }
    }
    const auto ts = static_cast<std::size_t>(t);
    for (std::size_t j = first; j < run.arrivals.size(); ++j) {
      const double cov = prefix - base[j];
      if (cov >= 1.0 - eps.coverage_eps) {
        // Older packets are at least as covered.
        first = j + 1;
        continue;
      }
      const bool is_big = t >= packet_alpha[j];
      const Branch& br = is_big ? big : small;
      TcpUpdate u;
      u.packet = j;
      u.t = t;
      u.big = is_big;
      u.coverage_before = cov;
      u.f = 1.0 - cov;
      u.y = br.y;
      const double dx = (cov + (is_big ? big_step : small_step)) / d;
      run.x.add(ts, dx);
      prefix += dx;
      u.delta_primal = u.f / d + dx;
      if (is_big) {
        ++run.big_updates;
        ++run.big_updates_per_ack[static_cast<std::size_t>(ack_index[j])];
        run.ledger.charge_prediction(u.delta_primal);
      } else {
        ++run.small_updates;
        run.ledger.charge_other(u.delta_primal);
      }
      run.ledger.add_dual(u.y);
      run.updates.push_back(u);
    }
  }
  run.steps = t;
  return run;
}

}  // namespace

TcpRun run_online_tcp(const TcpInstance& instance, const EpsilonPolicy& eps,
                      bool keep_history) {
  return run_engine(instance, TcpPrediction{}, 1.0, eps, keep_history);
}

TcpRun run_pdla_tcp(const TcpInstance& instance, const TcpPrediction& prediction,
                    double lambda, const EpsilonPolicy& eps, bool keep_history) {
  require_lambda(lambda);
  return run_engine(instance, prediction, lambda, eps, keep_history);
}

namespace {

// X[t + 1] = sum of x_k for k <= t, for t < steps.
std::vector<double> prefix_sums(const TcpRun& run) {
  std::vector<double> X(static_cast<std::size_t>(run.steps) + 1, 0.0);
  for (std::size_t t = 0; t < static_cast<std::size_t>(run.steps); ++t) {
    X[t + 1] = X[t] + run.x.get(t);
  }
  return X;
}

}  // namespace

double tcp_lp_objective(const TcpRun& run) {
  const auto X = prefix_sums(run);
  const auto steps = static_cast<std::size_t>(run.steps);
  double total = X[steps];
  double latency = 0.0;
  for (std::size_t j = 0; j < run.arrivals.size();) {
    const auto s = static_cast<std::size_t>(run.arrivals[j]);
    std::size_t w = 0;
    while (j < run.arrivals.size() &&
           static_cast<std::size_t>(run.arrivals[j]) == s) {
      ++w;
      ++j;
    }
    double group = 0.0;
    for (std::size_t t = s; t < steps; ++t) {
      const double cov = X[t + 1] - X[s];
      if (cov >= 1.0) break;
      group += 1.0 - cov;
    }
    latency += static_cast<double>(w) * group;
  }
  return total + latency / static_cast<double>(run.d);
}

TcpDualCheck check_tcp_dual(const TcpRun& run, double eps) {
  TcpDualCheck check;
  const double cap = 1.0 / static_cast<double>(run.d);
  std::vector<double> diff(static_cast<std::size_t>(run.steps) + 2, 0.0);
  for (const auto& u : run.updates) {
    if (u.y < 0.0 || u.y > cap * (1.0 + 1e-12)) check.ok = false;
    diff[static_cast<std::size_t>(run.arrivals[u.packet])] += u.y;
    diff[static_cast<std::size_t>(u.t) + 1] -= u.y;
  }
  double running = 0.0;
  for (double v : diff) {
    running += v;
    check.scale_needed = std::max(check.scale_needed, running);
  }
  if (check.scale_needed > 1.0 + cap + eps) check.ok = false;
  return check;
}

namespace {

struct Groups {
  std::vector<TimeStep> step;
  std::vector<std::int64_t> count;
};

Groups arrival_groups(const TcpInstance& instance) {
  Groups g;
  for (std::size_t i = 0; i < instance.counts.size(); ++i) {
    if (instance.counts[i] > 0) {
      g.step.push_back(static_cast<TimeStep>(i));
      g.count.push_back(instance.counts[i]);
    }
  }
  return g;
}

}  // namespace

TcpOptimum offline_opt_tcp(const TcpInstance& instance) {
  instance.validate();
  const Groups g = arrival_groups(instance);
  const std::size_t m = g.step.size();
  if (m > kMaxTcpDpSteps) {
    std::ostringstream os;
    os << "tcp DP supports at most " << kMaxTcpDpSteps
       << " distinct arrival steps, got " << m;
    throw SizeError(os.str());
  }
  const double d = static_cast<double>(instance.d);
  // C[i] = packets in groups < i, W[i] = sum of step * count over groups < i.
  std::vector<std::int64_t> C(m + 1, 0), W(m + 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    C[i + 1] = C[i] + g.count[i];
    W[i + 1] = W[i] + g.count[i] * g.step[i];
  }
  std::vector<double> opt(m + 1, 0.0);
  std::vector<std::size_t> from(m + 1, 0);
  for (std::size_t i = 1; i <= m; ++i) {
    const TimeStep s = g.step[i - 1];
    double best = kInfinity;
    std::size_t arg = 0;
    for (std::size_t j = 0; j < i; ++j) {
      const std::int64_t wait = s * (C[i] - C[j]) - (W[i] - W[j]);
      const double v = opt[j] + 1.0 + static_cast<double>(wait) / d;
      if (v < best) {
        best = v;
        arg = j;
      }
    }
    opt[i] = best;
    from[i] = arg;
  }
  TcpOptimum result;
  result.cost = opt[m];
  for (std::size_t i = m; i > 0; i = from[i]) {
    result.ack_times.push_back(g.step[i - 1]);
  }
  std::reverse(result.ack_times.begin(), result.ack_times.end());
  return result;
}

double brute_force_tcp(const TcpInstance& instance) {
  instance.validate();
  const Groups g = arrival_groups(instance);
  const std::size_t m = g.step.size();
  if (m > kMaxTcpBruteSteps) {
    std::ostringstream os;
    os << "tcp brute force supports at most " << kMaxTcpBruteSteps
       << " distinct arrival steps, got " << m;
    throw SizeError(os.str());
  }
  if (m == 0) return 0.0;
  const double d = static_cast<double>(instance.d);
  double best = kInfinity;
  const std::uint64_t last = std::uint64_t{1} << (m - 1);
  for (std::uint64_t mask = 0; mask < last; ++mask) {
    const std::uint64_t chosen = mask | last;
    std::int64_t acks = 0;
    std::int64_t wait = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (chosen >> i & 1U) ++acks;
      std::size_t k = i;
      while (!(chosen >> k & 1U)) ++k;
      wait += g.count[i] * (g.step[k] - g.step[i]);
    }
    best = std::min(best, static_cast<double>(acks) + static_cast<double>(wait) / d);
  }
  return best;
}

TcpPredictionCost prediction_cost_tcp(const TcpInstance& instance,
                                      const TcpPrediction& prediction) {
  instance.validate();
  prediction.validate();
  TcpPredictionCost result;
  result.n_acks = static_cast<std::int64_t>(prediction.acks.size());
  std::int64_t wait = 0;
  for (std::size_t i = 0; i < instance.counts.size(); ++i) {
    if (instance.counts[i] == 0) continue;
    const TimeStep a = alpha(prediction, static_cast<TimeStep>(i));
    if (a == kNoAck) {
      result.covers_all = false;
      continue;
    }
    wait += instance.counts[i] * (a - static_cast<TimeStep>(i));
  }
  result.latency = static_cast<double>(wait) / static_cast<double>(instance.d);
  result.s_cost = result.covers_all
                      ? static_cast<double>(result.n_acks) + result.latency
                      : kInfinity;
  return result;
}

TcpBounds tcp_bounds(const TcpInstance& instance, const TcpPrediction& prediction,
                     double lambda, double opt) {
  require_lambda(lambda);
  const auto pc = prediction_cost_tcp(instance, prediction);
  const double d = static_cast<double>(instance.d);
  const double big = 1.0 - discrete_exp(-lambda, d);
  const double small = 1.0 - discrete_exp(-1.0 / lambda, d);
  TcpBounds r;
  r.opt = opt;
  r.s_cost = pc.s_cost;
  if (instance.packet_count() == 0) {
    r.consistency_bound = 0.0;
  } else if (!pc.covers_all) {
    r.consistency_bound = kInfinity;
  } else {
    const double per_ack = static_cast<double>(ceil_count(lambda * d)) / d / big;
    r.consistency_bound =
        static_cast<double>(pc.n_acks) * per_ack + pc.latency / small;
  }
  r.robustness_bound = (1.0 + 1.0 / d) * opt / big;
  return r;
}

TcpBounds tcp_bounds(const TcpInstance& instance, const TcpPrediction& prediction,
                     double lambda) {
  return tcp_bounds(instance, prediction, lambda, offline_opt_tcp(instance).cost);
}

double round_tcp(const TcpRun& run, SeededRng& rng) {
  const double p = 1.0 - rng.uniform01();
  const auto X = prefix_sums(run);
  const auto steps = static_cast<std::size_t>(run.steps);
  // next_ack[t] = first step >= t with an ack, or steps if none.
  std::vector<std::size_t> next_ack(steps + 1, steps);
  double acks = 0.0;
  for (std::size_t t = steps; t-- > 0;) {
    const double n = std::floor(X[t + 1] - p) - std::floor(X[t] - p);
    acks += n;
    next_ack[t] = n > 0.0 ? t : next_ack[t + 1];
  }
  bool forced = false;
  std::int64_t wait = 0;
  for (TimeStep s : run.arrivals) {
    const std::size_t a = next_ack[static_cast<std::size_t>(s)];
    if (a == steps) forced = true;
    wait += static_cast<std::int64_t>(a) - s;
  }
  if (forced) acks += 1.0;
  return acks + static_cast<double>(wait) / static_cast<double>(run.d);
}

}  // namespace pdla
