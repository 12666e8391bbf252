#include "pdla/skirental.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pdla {

void SkiInstance::validate() const {
  if (B < 1) throw DomainError("ski rental: B must be >= 1");
  if (N < 0) throw DomainError("ski rental: N must be >= 0");
}

namespace {

SkiRun run_ski(const SkiInstance& instance, double c, double c_prime,
               const EpsilonPolicy& eps) {
  SkiRun run;
  run.B = instance.B;
  run.c = c;
  run.c_prime = c_prime;
  const auto n = static_cast<std::size_t>(instance.N);
  run.x_after.assign(n + 1, 0.0);
  run.f.assign(n + 1, 0.0);
  run.y.assign(n + 1, 0.0);
  const double b = static_cast<double>(instance.B);
  double x = 0.0;
  for (std::size_t j = 1; j <= n; ++j) {
    if (x < 1.0 - eps.coverage_eps) {
      run.f[j] = 1.0 - x;
      const double next = (1.0 + 1.0 / b) * x + 1.0 / ((c - 1.0) * b);
      run.ledger.charge_prediction(run.f[j] + b * (next - x));
      x = next;
      run.y[j] = c_prime;
      run.ledger.add_dual(c_prime);
      ++run.updates;
    }
    run.x_after[j] = x;
  }
  run.x = x;
  return run;
}

}  // namespace

SkiRun run_online_ski(const SkiInstance& instance, const EpsilonPolicy& eps) {
  instance.validate();
  const double c = discrete_exp(1.0, static_cast<double>(instance.B));
  return run_ski(instance, c, 1.0, eps);
}

SkiRun run_pdla_ski(const SkiInstance& instance, const SkiPrediction& prediction,
                    double lambda, const EpsilonPolicy& eps) {
  require_lambda(lambda);
  instance.validate();
  if (prediction.n_pred < 0) throw DomainError("ski rental: n_pred must be >= 0");
  const double b = static_cast<double>(instance.B);
  const bool buy = prediction.n_pred >= instance.B;
  SkiRun run = buy ? run_ski(instance, discrete_exp(lambda, b), 1.0, eps)
                   : run_ski(instance, discrete_exp(1.0 / lambda, b), lambda, eps);
  run.lambda = lambda;
  run.buy_branch = buy;
  return run;
}

SkiBounds ski_bounds(const SkiInstance& instance, const SkiPrediction& prediction,
                     double lambda) {
  require_lambda(lambda);
  instance.validate();
  const double b = static_cast<double>(instance.B);
  const double n = static_cast<double>(instance.N);
  const double denom = 1.0 - discrete_exp(-lambda, b);
  const bool buy = prediction.n_pred >= instance.B;

  SkiBounds r;
  r.opt = std::min(n, b);
  r.s_cost = buy ? b : n;
  r.plain_consistency_bound = lambda / denom * r.s_cost;
  r.plain_robustness_bound = r.opt / denom;
  if (buy) {
    const auto big = ceil_count(lambda * b);
    r.max_updates = std::min<std::int64_t>(instance.N, big);
    r.consistency_bound = (static_cast<double>(big) / b) / denom * r.s_cost;
    r.robustness_bound = r.plain_robustness_bound;
  } else {
    const auto small = ceil_count(b / lambda);
    r.max_updates = std::min<std::int64_t>(instance.N, small);
    const double scale =
        std::max(1.0, lambda * static_cast<double>(small) / b);
    r.consistency_bound = r.plain_consistency_bound;
    r.robustness_bound = scale * r.plain_robustness_bound;
  }
  return r;
}

SkiDualCheck check_ski_dual(const SkiRun& run, double eps) {
  SkiDualCheck check;
  for (double v : run.y) check.dual_sum += v;
  check.bound = static_cast<double>(run.B) + run.c_prime;
  check.ok = check.dual_sum <= check.bound + eps;
  return check;
}

double ski_lp_objective(const SkiRun& run) {
  const double b = static_cast<double>(run.B);
  double cost = 0.0;
  for (std::size_t j = 1; j < run.x_after.size(); ++j) {
    const double prev = std::min(run.x_after[j - 1], 1.0);
    const double cur = std::min(run.x_after[j], 1.0);
    cost += b * (cur - prev) + (1.0 - cur);
  }
  return cost;
}

double round_ski(const SkiRun& run, SeededRng& rng) {
  const double p = 1.0 - rng.uniform01();
  const double b = static_cast<double>(run.B);
  double cost = 0.0;
  for (std::size_t j = 1; j < run.x_after.size(); ++j) {
    if (p <= run.x_after[j - 1]) break;  // already bought
    if (p <= run.x_after[j]) {
      cost += b;
      break;
    }
    cost += 1.0;
  }
  return cost;
}

LowerBoundCertificate verify_lower_bound_certificate(double lambda,
                                                     std::int64_t grid_points) {
  require_lambda(lambda);
  if (grid_points < 1000) {
    throw DomainError("certificate: grid_points must be >= 1000");
  }
  const double e_neg = std::exp(-lambda);
  LowerBoundCertificate cert;
  cert.lambda = lambda;
  cert.grid_points = grid_points;
  cert.K = 1.0 / (1.0 - lambda * e_neg - e_neg);
  const double K = cert.K;
  const double lambda_d = K;
  const double lambda_c = K * e_neg;

  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(grid_points) + 1);
  for (std::int64_t i = 0; i < grid_points; ++i) {
    grid.push_back(static_cast<double>(i) / static_cast<double>(grid_points - 1));
  }
  grid.back() = 1.0;
  grid.push_back(lambda);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  auto density = [&](double t) { return t <= lambda ? K * std::exp(-t) : 0.0; };
  const std::size_t m = grid.size();
  // head[i] = int_0^{grid[i]} t lambda_t dt, tail[i] = int_{grid[i]}^1 lambda_t dt
  std::vector<double> head(m, 0.0), tail(m, 0.0);
  for (std::size_t i = 1; i < m; ++i) {
    const double a = grid[i - 1], b = grid[i];
    double piece = 0.0;
    if (a < lambda) piece = 0.5 * (b - a) * (a * density(a) + b * density(b));
    head[i] = head[i - 1] + piece;
  }
  for (std::size_t i = m - 1; i-- > 0;) {
    const double a = grid[i], b = grid[i + 1];
    double piece = 0.0;
    if (a < lambda) piece = 0.5 * (b - a) * (density(a) + density(b));
    tail[i] = tail[i + 1] + piece;
  }

  cert.first_constraint_integral = head[m - 1];
  double violation = std::max(0.0, head[m - 1] - 1.0);
  for (std::size_t i = 0; i < m; ++i) {
    const double t = grid[i];
    const double lhs = lambda_d - (t + 1.0) * lambda_c;
    const double rhs = head[i] + (t + 1.0) * tail[i];
    violation = std::max(violation, lhs - rhs);
  }
  cert.max_constraint_violation = violation;
  cert.dual_objective = lambda_d - lambda_c * lambda / -std::expm1(-lambda);
  return cert;
}

}  // namespace pdla
