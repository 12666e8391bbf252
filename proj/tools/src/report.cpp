#include "pdla_tools/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "json.hpp"

namespace pdla::tools {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kSlack = 1e-9;

nlohmann::json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

}  // namespace

bool within(double value, double bound, double rel) {
  return value <= bound + rel * std::max(1.0, std::abs(bound));
}

double competitive_ratio(double alg, double opt) {
  if (std::isnan(opt)) return kNaN;
  if (opt <= 0.0) return alg <= 0.0 ? 1.0 : kInfinity;
  return alg / opt;
}

bool RunReport::all_checks_ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const auto& c) { return c.second; });
}

std::string RunReport::to_json() const {
  nlohmann::json doc;
  doc["problem"] = problem;
  doc["lambda"] = lambda;
  doc["alg_cost"] = number(alg_cost);
  doc["dual_cost"] = number(dual_cost);
  doc["opt_cost"] = number(opt_cost);
  doc["pred_cost"] = number(pred_cost);
  doc["ratio"] = number(ratio);
  doc["consistency_bound"] = number(consistency_bound);
  doc["robustness_bound"] = number(robustness_bound);
  if (rounded_cost) doc["rounded_cost"] = number(*rounded_cost);
  nlohmann::json c = nlohmann::json::object();
  for (const auto& [name, ok] : checks) c[name] = ok;
  doc["checks"] = c;
  doc["all_checks_ok"] = all_checks_ok();
  return doc.dump(2);
}

RunReport evaluate_setcover(const CoverInstance& instance,
                            const CoverPrediction& prediction, double lambda,
                            const EpsilonPolicy& eps) {
  const CoverRun run = run_pdla_setcover(instance, prediction, lambda, eps);
  RunReport r;
  r.problem = "setcover";
  r.lambda = lambda;
  r.alg_cost = run.ledger.primal_total();
  r.dual_cost = run.ledger.dual_total();
  const auto pc = prediction_cost_setcover(instance, prediction);
  r.pred_cost = pc.is_feasible ? pc.s_cost : kInfinity;
  r.consistency_bound = kInfinity;

  const auto by_element = instance.sets_by_element();
  bool covered = true;
  for (ElementId e : instance.arrivals) {
    double sum = 0.0;
    for (SetId s : by_element[e]) sum += run.x[s];
    covered = covered && sum >= 1.0 - eps.coverage_eps;
  }
  r.add_check("coverage", covered);
  bool bounded = true;
  for (double v : run.x.values()) bounded = bounded && v <= 3.0 + kSlack;
  r.add_check("x_at_most_3", bounded);

  const double d = static_cast<double>(std::max<std::size_t>(run.max_degree, 1));
  const double mix = (1.0 + lambda) / (lambda / d + 1.0 - lambda);
  bool step_ratio = true;
  bool step_consistency = true;
  for (const auto& it : run.iterations) {
    step_ratio = step_ratio && it.primal_increase <= 2.0 + kSlack;
    if (it.covered_by_prediction) {
      step_consistency = step_consistency &&
                         it.unpredicted_part <= mix * it.predicted_part + kSlack;
    }
  }
  r.add_check("iteration_primal_dual_ratio", step_ratio);
  r.add_check("iteration_consistency", step_consistency);
  const auto dual = check_cover_dual_feasibility(run, instance, lambda);
  r.add_check("dual_scaling", dual.ok);
  r.add_check("weak_duality", within(r.alg_cost, 2.0 * r.dual_cost));
  r.add_check("ledger", run.ledger.decomposition_holds(eps.ledger_eps));

  if (instance.sets.size() <= kMaxBruteForceSets) {
    r.opt_cost = offline_opt_setcover_brute(instance).cost;
    r.robustness_bound = 2.0 * dual.bound * r.opt_cost;
    r.add_check("robustness", within(r.alg_cost, r.robustness_bound));
  } else {
    r.opt_cost = kNaN;
    r.robustness_bound = kInfinity;
  }
  r.ratio = competitive_ratio(r.alg_cost, r.opt_cost);
  return r;
}

RunReport evaluate_ski(const SkiInstance& instance,
                       const SkiPrediction& prediction, double lambda,
                       const EpsilonPolicy& eps) {
  const SkiRun run = run_pdla_ski(instance, prediction, lambda, eps);
  const SkiBounds b = ski_bounds(instance, prediction, lambda);
  RunReport r;
  r.problem = "ski";
  r.lambda = lambda;
  r.alg_cost = run.cost();
  r.dual_cost = run.ledger.dual_total();
  r.opt_cost = b.opt;
  r.pred_cost = b.s_cost;
  r.ratio = competitive_ratio(r.alg_cost, r.opt_cost);
  r.consistency_bound = b.consistency_bound;
  r.robustness_bound = b.robustness_bound;

  bool feasible = true;
  for (std::size_t j = 1; j < run.x_after.size(); ++j) {
    feasible = feasible && run.x_after[j - 1] + run.f[j] >= 1.0 - eps.coverage_eps;
  }
  r.add_check("feasibility", feasible);
  r.add_check("dual_budget", check_ski_dual(run).ok);
  r.add_check("update_count", run.updates <= b.max_updates);
  r.add_check("consistency", within(r.alg_cost, b.consistency_bound));
  r.add_check("robustness", within(r.alg_cost, b.robustness_bound));
  r.add_check("ledger", run.ledger.decomposition_holds(eps.ledger_eps));
  return r;
}

RunReport evaluate_bahncard(const BahncardInstance& instance,
                            const BahncardPrediction& prediction, double lambda,
                            const EpsilonPolicy& eps) {
  const BahncardRun run = run_pdla_bahncard(instance, prediction, lambda, eps);
  const BahncardBounds b = bahncard_bounds(instance, prediction, lambda);
  RunReport r;
  r.problem = "bahncard";
  r.lambda = lambda;
  r.alg_cost = run.cost();
  r.dual_cost = run.ledger.dual_total();
  r.opt_cost = b.opt;
  r.pred_cost = b.s_cost;
  r.ratio = competitive_ratio(r.alg_cost, r.opt_cost);
  r.consistency_bound = b.consistency_bound;
  r.robustness_bound = b.robustness_bound;

  const double big_cost = bahncard_update_cost(lambda, instance.B, instance.beta);
  const double small_cost =
      bahncard_update_cost(1.0 / lambda, instance.B, instance.beta);
  bool feasible = true;
  bool step_ratio = true;
  bool outside = true;
  for (const auto& t : run.trips) {
    feasible = feasible && t.d + t.f >= 1.0 - eps.coverage_eps &&
               t.mass_after - t.mass_before_window >= t.d - eps.coverage_eps;
    step_ratio = step_ratio && within(t.delta_primal, big_cost * t.c);
    if (t.interval < 0) outside = outside && within(t.delta_primal, small_cost);
  }
  bool intervals = true;
  for (std::size_t i = 0; i < run.interval_cost.size(); ++i) {
    const double paid =
        instance.B + instance.beta * static_cast<double>(run.interval_trips[i]);
    intervals = intervals && within(run.interval_cost[i], b.interval_ratio * paid);
  }
  r.add_check("feasibility", feasible);
  r.add_check("dual_scaling", check_bahncard_dual(run, instance).ok);
  r.add_check("update_primal_dual_ratio", step_ratio);
  r.add_check("interval_consistency", intervals);
  r.add_check("outside_interval_cost", outside);
  r.add_check("consistency", within(r.alg_cost, b.consistency_bound));
  r.add_check("robustness", within(r.alg_cost, b.robustness_bound));
  r.add_check("ledger", run.ledger.decomposition_holds(eps.ledger_eps));
  return r;
}

RunReport evaluate_tcp(const TcpInstance& instance,
                       const TcpPrediction& prediction, double lambda,
                       std::optional<double> opt, const EpsilonPolicy& eps) {
  const TcpRun run = run_pdla_tcp(instance, prediction, lambda, eps);
  const double opt_cost = opt ? *opt : offline_opt_tcp(instance).cost;
  const TcpBounds b = tcp_bounds(instance, prediction, lambda, opt_cost);
  RunReport r;
  r.problem = "tcp";
  r.lambda = lambda;
  r.alg_cost = run.cost();
  r.dual_cost = run.ledger.dual_total();
  r.opt_cost = opt_cost;
  r.pred_cost = b.s_cost;
  r.ratio = competitive_ratio(r.alg_cost, r.opt_cost);
  r.consistency_bound = b.consistency_bound;
  r.robustness_bound = b.robustness_bound;

  const double d = static_cast<double>(instance.d);
  const double big = (1.0 / d) / (1.0 - discrete_exp(-lambda, d));
  const double small = (1.0 / d) / (1.0 - discrete_exp(-1.0 / lambda, d));
  bool closed_form = true;
  for (const auto& u : run.updates) {
    const double expected = u.big ? big : small;
    closed_form = closed_form &&
                  std::abs(u.delta_primal - expected) <= 1e-12 * expected;
  }
  const auto cap = ceil_count(lambda * d);
  bool per_ack = std::all_of(run.big_updates_per_ack.begin(),
                             run.big_updates_per_ack.end(),
                             [cap](std::int64_t n) { return n <= cap; });
  r.add_check("update_cost_closed_form", closed_form);
  r.add_check("big_updates_per_ack", per_ack);
  r.add_check("dual_scaling", check_tcp_dual(run).ok);
  r.add_check("consistency", within(r.alg_cost, b.consistency_bound));
  r.add_check("robustness", within(r.alg_cost, b.robustness_bound));
  r.add_check("ledger", run.ledger.decomposition_holds(eps.ledger_eps));
  return r;
}

}  // namespace pdla::tools
