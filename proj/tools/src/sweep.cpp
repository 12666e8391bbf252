#include "pdla_tools/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

#include "pdla_tools/report.hpp"

namespace pdla::tools {

void SweepSpec::validate() const {
  if (problem != "tcp") {
    throw DomainError("sweep: only the tcp problem has a generated grid");
  }
  if (trials < 1) throw DomainError("sweep: trials must be >= 1");
  if (length < 1) throw DomainError("sweep: length must be >= 1");
  if (d < 1) throw DomainError("sweep: d must be >= 1");
  if (dists.empty() || lambdas.empty() || replacement_rates.empty()) {
    throw DomainError("sweep: empty grid");
  }
  for (const auto& dist : dists) dist.validate();
  for (double l : lambdas) require_lambda(l);
  for (double p : replacement_rates) NoiseSpec{p}.validate();
}

std::uint64_t sweep_instance_seed(std::uint64_t base_seed,
                                  const DistributionSpec& dist, int trial) {
  return hash_seed({base_seed, static_cast<std::uint64_t>(dist.kind),
                    static_cast<std::uint64_t>(trial)});
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("PDLA_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  const std::size_t nd = spec.dists.size();
  const std::size_t nl = spec.lambdas.size();
  const std::size_t np = spec.replacement_rates.size();
  const auto nt = static_cast<std::size_t>(spec.trials);
  std::vector<SweepRow> rows(nd * nl * np * nt);
  auto slot = [&](std::size_t di, std::size_t li, std::size_t pi, std::size_t ti) {
    return ((di * nl + li) * np + pi) * nt + ti;
  };

  // One job per (distribution, replacement rate, trial); it covers every
  // lambda so the instance, prediction and optimum are computed once.
  const std::size_t jobs = nd * np * nt;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t job; (job = next.fetch_add(1)) < jobs;) {
      const std::size_t ti = job % nt;
      const std::size_t pi = job / nt % np;
      const std::size_t di = job / (nt * np);
      try {
        const auto& dist = spec.dists[di];
        const int trial = static_cast<int>(ti);
        const std::uint64_t seed = sweep_instance_seed(spec.base_seed, dist, trial);
        SeededRng instance_rng(seed, 0);
        TcpInstance real{generate(dist, spec.length, instance_rng), spec.d};
        SeededRng noise_rng(seed, 1 + pi);
        const double p = spec.replacement_rates[pi];
        TcpInstance noisy{perturb(real.counts, NoiseSpec{p}, dist, noise_rng),
                          spec.d};
        const TcpPrediction prediction = make_prediction(noisy, &real);
        const double opt = offline_opt_tcp(real).cost;
        for (std::size_t li = 0; li < nl; ++li) {
          const double lambda = spec.lambdas[li];
          const RunReport rep = evaluate_tcp(real, prediction, lambda, opt);
          SweepRow& row = rows[slot(di, li, pi, ti)];
          row.problem = spec.problem;
          row.dist = dist.name();
          row.lambda = lambda;
          row.replacement_rate = p;
          row.trial = trial;
          row.seed = seed;
          row.alg_cost = rep.alg_cost;
          row.opt_cost = rep.opt_cost;
          row.pred_cost = rep.pred_cost;
          row.ratio = rep.ratio;
          row.consistency_bound = rep.consistency_bound;
          row.robustness_bound = rep.robustness_bound;
          row.all_checks_ok = rep.all_checks_ok();
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const unsigned threads = std::max<unsigned>(
      1, std::min<std::size_t>(spec.threads ? spec.threads : default_thread_count(),
                               jobs));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::vector<AggregateRow> aggregate(const std::vector<SweepRow>& rows) {
  std::vector<AggregateRow> out;
  std::map<std::tuple<std::string, std::string, double, double>, std::size_t> index;
  for (const auto& r : rows) {
    const auto key = std::make_tuple(r.problem, r.dist, r.lambda, r.replacement_rate);
    auto [it, inserted] = index.try_emplace(key, out.size());
    if (inserted) {
      AggregateRow a;
      a.problem = r.problem;
      a.dist = r.dist;
      a.lambda = r.lambda;
      a.replacement_rate = r.replacement_rate;
      out.push_back(a);
    }
    AggregateRow& a = out[it->second];
    ++a.trials;
    a.mean_ratio += r.ratio;
    a.max_ratio = a.trials == 1 ? r.ratio : std::max(a.max_ratio, r.ratio);
    a.all_checks_ok = a.all_checks_ok && r.all_checks_ok;
  }
  for (auto& a : out) a.mean_ratio /= a.trials;
  return out;
}

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

void write_rows_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "problem,dist,lambda,replacement_rate,trial,seed,alg_cost,opt_cost,"
         "pred_cost,ratio,consistency_bound,robustness_bound,all_checks_ok\n";
  for (const auto& r : rows) {
    out << r.problem << ',' << r.dist << ',' << fmt(r.lambda) << ','
        << fmt(r.replacement_rate) << ',' << r.trial << ',' << r.seed << ','
        << fmt(r.alg_cost) << ',' << fmt(r.opt_cost) << ',' << fmt(r.pred_cost)
        << ',' << fmt(r.ratio) << ',' << fmt(r.consistency_bound) << ','
        << fmt(r.robustness_bound) << ',' << (r.all_checks_ok ? "true" : "false")
        << '\n';
  }
}

void write_aggregate_csv(std::ostream& out, const std::vector<AggregateRow>& rows) {
  out << "problem,dist,lambda,replacement_rate,trials,mean_ratio,max_ratio,"
         "all_checks_ok\n";
  for (const auto& a : rows) {
    out << a.problem << ',' << a.dist << ',' << fmt(a.lambda) << ','
        << fmt(a.replacement_rate) << ',' << a.trials << ',' << fmt(a.mean_ratio)
        << ',' << fmt(a.max_ratio) << ',' << (a.all_checks_ok ? "true" : "false")
        << '\n';
  }
}

}  // namespace pdla::tools
