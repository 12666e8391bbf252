// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "pdla/core.hpp"
#include "pdla_tools/report.hpp"
#include "pdla_tools/suites.hpp"
#include "pdla_tools/sweep.hpp"

using namespace pdla;
using namespace pdla::tools;

namespace {

int failures = 0;

void line(bool ok, const std::string& name, const std::string& detail) {
  std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << detail << std::endl;
  if (!ok) ++failures;
}

void combined(const std::string& name, const std::vector<SuiteResult>& suites) {
  bool ok = true;
  std::size_t checked = 0;
  std::ostringstream os;
  for (const auto& s : suites) {
    ok = ok && s.ok;
    checked += s.checked;
    if (!s.ok) os << "[" << format(s) << "] ";
  }
  os << checked << " checks in " << suites.size() << " suites";
  if (suites.size() == 1 && !suites[0].detail.empty()) os << "; " << suites[0].detail;
  line(ok, name, os.str());
}

double limit_constant(double lambda) {
  static const std::map<double, double> k = {
      {1.0, 1.58}, {0.8, 1.68}, {0.6, 2.21}, {0.4, 3.03}};
  return k.at(lambda);
}

}  // namespace

int main() {
  const SweepSpec spec;  // three distributions, 4 lambdas, 11 rates, 10 trials
  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = run_sweep(spec);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const double d = static_cast<double>(spec.d);

  {
    bool finite_ok = true, limit_ok = true;
    double worst_finite = 0.0, worst_limit = 0.0;
    for (const auto& r : rows) {
      const double finite = (1.0 + 1.0 / d) / (1.0 - discrete_exp(-r.lambda, d));
      const double limit = limit_constant(r.lambda) * (1.0 + 2.0 / d);
      worst_finite = std::max(worst_finite, r.ratio / finite);
      worst_limit = std::max(worst_limit, r.ratio / limit);
      finite_ok = finite_ok && r.ratio <= finite;
      limit_ok = limit_ok && r.ratio <= limit;
    }
    std::ostringstream os;
    os << rows.size() << " rows in " << seconds << " s; max ratio / finite-d bound "
       << worst_finite << ", max ratio / (constant (1+2/d)) " << worst_limit;
    line(finite_ok && limit_ok && seconds <= 600.0 && rows.size() == 1320,
         "tcp_robustness_envelope", os.str());
  }

  const auto aggregates = aggregate(rows);
  std::map<std::tuple<std::string, double, double>, double> mean;
  for (const auto& a : aggregates) mean[{a.dist, a.lambda, a.replacement_rate}] = a.mean_ratio;

  {
    bool ok = true;
    std::ostringstream os;
    for (const auto& dist : spec.dists) {
      const double low = mean.at({dist.name(), 0.4, 0.0});
      const double high = mean.at({dist.name(), 1.0, 0.0});
      ok = ok && low < high;
      os << dist.name() << " " << low << " < " << high << "; ";
    }
    std::size_t trials = 0;
    double worst = 0.0;
    for (const auto& r : rows) {
      if (r.replacement_rate != 0.0) continue;
      ++trials;
      worst = std::max(worst, r.alg_cost / r.consistency_bound);
      ok = ok && within(r.alg_cost, r.consistency_bound, 1e-9);
    }
    os << trials << " trials, max cost / consistency bound " << worst;
    line(ok, "tcp_consistency_at_p0", os.str());
  }

  {
    bool ok = true;
    double worst = 0.0;
    for (const auto& dist : spec.dists) {
      for (double lambda : {0.4, 0.6, 0.8}) {
        for (std::size_t i = 1; i < spec.replacement_rates.size(); ++i) {
          const double prev = mean.at({dist.name(), lambda, spec.replacement_rates[i - 1]});
          const double cur = mean.at({dist.name(), lambda, spec.replacement_rates[i]});
          worst = std::max(worst, prev - cur);
          ok = ok && prev - cur <= 0.05;
        }
      }
    }
    std::ostringstream os;
    os << "largest adjacent decrease of the mean ratio " << worst << " (limit 0.05)";
    line(ok, "tcp_smooth_degradation", os.str());
  }

  combined("ski_exact_bounds_and_trace", {ski_grid_suite(), ski_trace_suite()});
  combined("lower_bound_certificate", {certificate_suite(100'000)});

  std::vector<SuiteResult> duals, oracles;
  for (const char* p : {"setcover", "ski", "bahncard", "tcp"}) {
    for (double lambda : {0.1, 0.5, 1.0}) duals.push_back(dual_suite(p, lambda, 200));
    oracles.push_back(oracle_suite(p, 200));
  }
  combined("dual_feasibility", duals);
  combined("oracle_equivalence", oracles);
  combined("rounding_unbiasedness",
           {ski_rounding_suite(100'000), tcp_rounding_suite(100'000),
            bahncard_rounding_suite(100'000)});
  combined("inequality_grids", {ratio_inequality_grid_suite(), recurrence_words_suite()});

  std::cout << (failures == 0 ? "ALL PASS" : "SOME FAILED") << " (" << failures
            << " failed)" << std::endl;
  return failures;
}
