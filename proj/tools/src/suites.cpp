#include "pdla_tools/suites.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pdla/bahncard.hpp"
#include "pdla/core.hpp"
#include "pdla/instancegen.hpp"
#include "pdla/oracles.hpp"
#include "pdla/setcover.hpp"
#include "pdla/skirental.hpp"
#include "pdla/tcpack.hpp"
#include "pdla_tools/random_instances.hpp"
#include "pdla_tools/report.hpp"

namespace pdla::tools {

namespace {

SuiteResult named(std::string name) {
  SuiteResult r;
  r.name = std::move(name);
  return r;
}

void record(SuiteResult& r, bool ok) {
  ++r.checked;
  if (!ok) {
    ++r.failures;
    r.ok = false;
  }
}

bool close(double a, double b, double tol = 1e-9) {
  return std::abs(a - b) <= tol;
}

struct Moments {
  double n = 0.0, mean = 0.0, m2 = 0.0;

  void add(double v) {
    n += 1.0;
    const double delta = v - mean;
    mean += delta / n;
    m2 += delta * (v - mean);
  }
  /// Standard error of the mean.
  double sem() const { return n > 1.0 ? std::sqrt(m2 / (n - 1.0) / n) : 0.0; }
};

}  // namespace

std::string format(const SuiteResult& result) {
  std::ostringstream os;
  os << (result.ok ? "PASS " : "FAIL ") << result.name << " (" << result.checked
     << " checked";
  if (result.failures > 0) os << ", " << result.failures << " failed";
  os << ")";
  if (!result.detail.empty()) os << " " << result.detail;
  return os.str();
}

SuiteResult ratio_inequality_grid_suite() {
  SuiteResult r = named("ratio_inequality_grid");
  const double ds[] = {1, 2, 5, 10, 100, 1e4};
  double worst = kInfinity;
  for (int li = 1; li <= 100; ++li) {
    const double lambda = li / 100.0;
    for (double d : ds) {
      for (int bi = 0; bi <= 10; ++bi) {
        const double beta = bi / 10.0;
        const auto res = check_ratio_inequalities(lambda, d, beta, 1e-9);
        for (int k = 0; k < 6; ++k) {
          record(r, res.holds[k]);
          worst = std::min(worst, res.margin[k]);
        }
      }
    }
  }
  std::ostringstream os;
  os << "min margin " << worst;
  r.detail = os.str();
  return r;
}

SuiteResult recurrence_words_suite() {
  SuiteResult r = named("recurrence_words_exhaustive");
  const double lambdas[] = {0.25, 0.5, 0.75, 1.0};
  const double starts[] = {0.0, 0.1, 0.5};
  std::string word;
  for (int len = 0; len <= 12; ++len) {
    for (std::uint32_t bits = 0; bits < (1U << len); ++bits) {
      word.assign(static_cast<std::size_t>(len), 'a');
      for (int i = 0; i < len; ++i) {
        if (bits >> i & 1U) word[static_cast<std::size_t>(i)] = 'b';
      }
      for (int d = 1; d <= 8; ++d) {
        for (double lambda : lambdas) {
          for (double s0 : starts) {
            record(r, check_recurrence_word(s0, word, lambda, d).satisfied);
          }
        }
      }
    }
  }
  return r;
}

SuiteResult certificate_suite(std::int64_t grid_points) {
  SuiteResult r = named("lower_bound_certificate");
  double worst_violation = 0.0;
  double worst_rel = 0.0;
  for (int li = 1; li <= 10; ++li) {
    const double lambda = li / 10.0;
    const auto cert = verify_lower_bound_certificate(lambda, grid_points);
    const double target = 1.0 / -std::expm1(-lambda);
    const double rel = std::abs(cert.dual_objective - target) / target;
    worst_violation = std::max(worst_violation, cert.max_constraint_violation);
    worst_rel = std::max(worst_rel, rel);
    record(r, cert.max_constraint_violation <= 1e-6 && rel <= 1e-8);
  }
  const auto at_one = verify_lower_bound_certificate(1.0, grid_points);
  std::ostringstream os;
  os << "max violation " << worst_violation << ", max objective rel err "
     << worst_rel << ", objective at lambda=1 " << at_one.dual_objective;
  r.detail = os.str();
  return r;
}

SuiteResult oracle_suite(const std::string& problem, int count,
                         std::uint64_t seed) {
  SuiteResult r = named("oracle_equivalence_" + problem);
  SeededRng rng(seed, 0);
  double worst = 0.0;
  for (int i = 0; i < count; ++i) {
    double fast = 0.0, slow = 0.0;
    if (problem == "setcover") {
      const auto inst = random_cover_instance(rng, 8, 10);
      fast = offline_opt_setcover_brute(inst).cost;
      slow = brute_force_setcover(inst);
    } else if (problem == "ski") {
      const auto inst = random_ski_instance(rng, 20);
      fast = opt(AnyInstance{inst}).opt_cost;
      // Buy on day k (or never) and rent before.
      slow = static_cast<double>(inst.N);
      for (std::int64_t k = 1; k <= inst.N; ++k) {
        slow = std::min(slow, static_cast<double>(k - 1 + inst.B));
      }
    } else if (problem == "bahncard") {
      const auto inst = random_bahncard_instance(rng, 12);
      fast = offline_opt_bahncard(inst).cost;
      slow = brute_force_bahncard(inst);
    } else if (problem == "tcp") {
      const auto inst = random_tcp_instance(rng, 12);
      fast = offline_opt_tcp(inst).cost;
      slow = brute_force_tcp(inst);
    } else {
      throw DomainError("unknown problem " + problem);
    }
    worst = std::max(worst, std::abs(fast - slow));
    record(r, close(fast, slow));
  }
  std::ostringstream os;
  os << "max |dp - brute| " << worst;
  r.detail = os.str();
  return r;
}

SuiteResult dual_suite(const std::string& problem, double lambda, int count,
                       std::uint64_t seed) {
  std::ostringstream name;
  name << "dual_feasibility_" << problem << "_lambda_" << lambda;
  SuiteResult r = named(name.str());
  SeededRng rng(seed, static_cast<std::uint64_t>(lambda * 1000));
  double worst = 0.0;  // largest used fraction of the allowed scaling
  for (int i = 0; i < count; ++i) {
    if (problem == "setcover") {
      const auto inst = random_cover_instance(rng, 8, 8);
      const auto pred = random_cover_prediction(rng, inst);
      const auto run = run_pdla_setcover(inst, pred, lambda);
      const auto chk = check_cover_dual_feasibility(run, inst, lambda);
      worst = std::max(worst, chk.max_violation_factor / chk.bound);
      record(r, chk.ok);
    } else if (problem == "ski") {
      const auto inst = random_ski_instance(rng, 50);
      const auto run = run_pdla_ski(inst, random_ski_prediction(rng, inst), lambda);
      const auto chk = check_ski_dual(run);
      worst = std::max(worst, chk.dual_sum / chk.bound);
      record(r, chk.ok);
    } else if (problem == "bahncard") {
      const auto inst = random_bahncard_instance(rng, 40);
      const auto run = run_pdla_bahncard(
          inst, random_bahncard_prediction(rng, inst), lambda);
      const auto chk = check_bahncard_dual(run, inst);
      worst = std::max(worst, chk.scale_needed / (1.0 + (1.0 - inst.beta) / inst.B));
      record(r, chk.ok);
    } else if (problem == "tcp") {
      const auto inst = random_tcp_instance(rng, 30);
      const auto run = run_pdla_tcp(inst, random_tcp_prediction(rng, inst), lambda);
      const auto chk = check_tcp_dual(run);
      worst = std::max(worst, chk.scale_needed /
                                  (1.0 + 1.0 / static_cast<double>(inst.d)));
      record(r, chk.ok);
    } else {
      throw DomainError("unknown problem " + problem);
    }
  }
  std::ostringstream os;
  os << "max used fraction of allowed scaling " << worst;
  r.detail = os.str();
  return r;
}

SuiteResult run_checks_suite(const std::string& problem, double lambda, int count,
                             std::uint64_t seed) {
  std::ostringstream name;
  name << "run_checks_" << problem << "_lambda_" << lambda;
  SuiteResult r = named(name.str());
  SeededRng rng(seed, static_cast<std::uint64_t>(lambda * 1000));
  std::string first_failure;
  for (int i = 0; i < count; ++i) {
    RunReport rep;
    if (problem == "setcover") {
      const auto inst = random_cover_instance(rng, 8, 8);
      rep = evaluate_setcover(inst, random_cover_prediction(rng, inst), lambda);
    } else if (problem == "ski") {
      const auto inst = random_ski_instance(rng, 50);
      rep = evaluate_ski(inst, random_ski_prediction(rng, inst), lambda);
    } else if (problem == "bahncard") {
      const auto inst = random_bahncard_instance(rng, 40);
      rep = evaluate_bahncard(inst, random_bahncard_prediction(rng, inst), lambda);
    } else if (problem == "tcp") {
      const auto inst = random_tcp_instance(rng, 30);
      rep = evaluate_tcp(inst, random_tcp_prediction(rng, inst), lambda);
    } else {
      throw DomainError("unknown problem " + problem);
    }
    const bool ok = rep.all_checks_ok();
    if (!ok && first_failure.empty()) {
      for (const auto& [check, passed] : rep.checks) {
        if (!passed) {
          first_failure = "first failure: instance " + std::to_string(i) + " " + check;
          break;
        }
      }
    }
    record(r, ok);
  }
  r.detail = first_failure;
  return r;
}

SuiteResult ski_grid_suite() {
  SuiteResult r = named("ski_bounds_grid");
  std::size_t plain_checked = 0;
  for (std::int64_t B : {1, 2, 10, 100}) {
    for (std::int64_t N = 0; N <= 3 * B; ++N) {
      for (std::int64_t n_pred : {std::int64_t{0}, B - 1, B, 3 * B}) {
        for (int li = 1; li <= 10; ++li) {
          const double lambda = li / 10.0;
          const SkiInstance inst{N, B};
          const SkiPrediction pred{n_pred};
          const auto run = run_pdla_ski(inst, pred, lambda);
          const auto b = ski_bounds(inst, pred, lambda);
          const double cost = run.cost();
          bool ok = cost <= std::min(b.consistency_bound, b.robustness_bound) + 1e-9;
          const double lb = lambda * static_cast<double>(B);
          const double bl = static_cast<double>(B) / lambda;
          if (std::abs(lb - std::round(lb)) < 1e-9 &&
              std::abs(bl - std::round(bl)) < 1e-9) {
            ++plain_checked;
            ok = ok && cost <= std::min(b.plain_consistency_bound,
                                        b.plain_robustness_bound) +
                                   1e-9;
          }
          record(r, ok);
        }
      }
    }
  }
  r.detail = "plain bounds also checked on " + std::to_string(plain_checked) +
             " integral cases";
  return r;
}

SuiteResult ski_trace_suite() {
  SuiteResult r = named("ski_lambda_one_trace");
  for (std::int64_t B : {1, 2, 10, 100}) {
    for (std::int64_t N = 0; N <= 3 * B; ++N) {
      for (std::int64_t n_pred : {std::int64_t{0}, B - 1, B, 3 * B}) {
        const SkiInstance inst{N, B};
        const auto a = run_pdla_ski(inst, SkiPrediction{n_pred}, 1.0);
        const auto b = run_online_ski(inst);
        record(r, a.x_after == b.x_after && a.f == b.f && a.y == b.y &&
                      a.cost() == b.cost());
      }
    }
  }
  return r;
}

SuiteResult ski_rounding_suite(int samples, std::uint64_t seed) {
  SuiteResult r = named("ski_rounding_unbiased");
  struct Case {
    SkiInstance inst;
    SkiPrediction pred;
    double lambda;
  };
  const Case cases[] = {{{100, 100}, {200}, 1.0},
                        {{30, 100}, {0}, 0.5},
                        {{7, 10}, {3}, 1.0}};
  std::ostringstream os;
  std::uint64_t stream = 0;
  for (const auto& c : cases) {
    const auto run = run_pdla_ski(c.inst, c.pred, c.lambda);
    SeededRng rng(seed, stream++);
    Moments m;
    for (int i = 0; i < samples; ++i) m.add(round_ski(run, rng));
    const double lp = ski_lp_objective(run);
    record(r, std::abs(m.mean - lp) <= 3.0 * m.sem());
    record(r, m.mean <= run.cost() + 3.0 * m.sem());
    os << "[N=" << c.inst.N << " B=" << c.inst.B << ": mc " << m.mean
       << " vs lp " << lp << " (ledger " << run.cost() << "), 3sigma "
       << 3.0 * m.sem() << "] ";
  }
  r.detail = os.str();
  return r;
}

SuiteResult tcp_rounding_suite(int samples, std::uint64_t seed) {
  SuiteResult r = named("tcp_rounding_unbiased");
  SeededRng gen(seed, 0);
  const TcpInstance inst{generate(DistributionSpec::poisson(), 200, gen), 20};
  const TcpInstance noisy{
      perturb(inst.counts, NoiseSpec{0.3}, DistributionSpec::poisson(), gen), 20};
  const auto pred = make_prediction(noisy, &inst);
  std::ostringstream os;
  std::uint64_t stream = 1;
  for (double lambda : {1.0, 0.6}) {
    const auto run = run_pdla_tcp(inst, pred, lambda);
    const double lp = tcp_lp_objective(run);
    SeededRng rng(seed, stream++);
    Moments m;
    for (int i = 0; i < samples; ++i) m.add(round_tcp(run, rng));
    record(r, std::abs(m.mean - lp) <= 3.0 * m.sem());
    record(r, m.mean <= run.cost() + 3.0 * m.sem());
    os << "[lambda=" << lambda << ": mc " << m.mean << " vs lp " << lp
       << " (ledger " << run.cost() << "), 3sigma " << 3.0 * m.sem() << "] ";
  }
  r.detail = os.str();
  return r;
}

SuiteResult bahncard_rounding_suite(int samples, std::uint64_t seed) {
  SuiteResult r = named("bahncard_rounding_one_sided");
  SeededRng gen(seed, 0);
  BahncardInstance inst;
  for (int i = 0; i < 40; ++i) inst.trips.push_back(uniform_int(gen, 0, 100));
  std::sort(inst.trips.begin(), inst.trips.end());
  inst.B = 5.0;
  inst.beta = 0.3;
  inst.T = 15;
  const BahncardPrediction pred{{10, 50}};
  std::ostringstream os;
  std::uint64_t stream = 1;
  for (double lambda : {1.0, 0.5}) {
    const auto run = run_pdla_bahncard(inst, pred, lambda);
    SeededRng rng(seed, stream++);
    Moments m;
    for (int i = 0; i < samples; ++i) m.add(round_bahncard(run, inst, rng));
    record(r, m.mean <= run.cost() + 3.0 * m.sem());
    os << "[lambda=" << lambda << ": mc " << m.mean << " vs " << run.cost()
       << ", 3sigma " << 3.0 * m.sem() << "] ";
  }
  r.detail = os.str();
  return r;
}

}  // namespace pdla::tools
