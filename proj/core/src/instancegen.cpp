#include "pdla/instancegen.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pdla {

DistributionSpec DistributionSpec::poisson(double mean) {
  DistributionSpec s;
  s.kind = Kind::poisson;
  s.mean = mean;
  return s;
}

DistributionSpec DistributionSpec::lomax(double shape, double scale) {
  DistributionSpec s;
  s.kind = Kind::lomax;
  s.shape = shape;
  s.scale = scale;
  return s;
}

DistributionSpec DistributionSpec::iterated_poisson(double mu, int n) {
  DistributionSpec s;
  s.kind = Kind::iterated_poisson;
  s.mu = mu;
  s.n = n;
  return s;
}

void DistributionSpec::validate() const {
  switch (kind) {
    case Kind::poisson:
      if (!(mean >= 0.0) || !std::isfinite(mean)) {
        throw DomainError("poisson mean must be finite and >= 0");
      }
      break;
    case Kind::lomax:
      if (!(shape > 0.0) || !(scale > 0.0)) {
        throw DomainError("lomax shape and scale must be > 0");
      }
      break;
    case Kind::iterated_poisson:
      if (!(mu >= 0.0) || !std::isfinite(mu) || n < 1) {
        throw DomainError("iterated poisson needs mu >= 0 and n >= 1");
      }
      break;
  }
}

std::string DistributionSpec::name() const {
  switch (kind) {
    case Kind::poisson:
      return "poisson";
    case Kind::lomax:
      return "pareto";
    case Kind::iterated_poisson:
      return "iterated-poisson";
  }
  return "unknown";
}

DistributionSpec parse_distribution(std::string_view name) {
  if (name == "poisson") return DistributionSpec::poisson();
  if (name == "pareto" || name == "lomax") return DistributionSpec::lomax();
  if (name == "iterated-poisson" || name == "iterated_poisson") {
    return DistributionSpec::iterated_poisson();
  }
  std::ostringstream os;
  os << "unknown distribution '" << name
     << "' (expected poisson, pareto or iterated-poisson)";
  throw DomainError(os.str());
}

void NoiseSpec::validate() const {
  if (!(replacement_rate >= 0.0 && replacement_rate <= 1.0)) {
    throw DomainError("replacement rate must lie in [0, 1]");
  }
}

namespace {

constexpr double kPoissonChunk = 30.0;

std::int64_t poisson_inversion(double mean, SeededRng& rng) {
  const double u = rng.uniform01();
  double p = std::exp(-mean);
  double cdf = p;
  std::int64_t k = 0;
  // The tail beyond a few hundred has probability far below 2^-53.
  while (u >= cdf && k < 1000) {
    ++k;
    p *= mean / static_cast<double>(k);
    cdf += p;
  }
  return k;
}

}  // namespace

std::int64_t draw_poisson(double mean, SeededRng& rng) {
  if (!(mean > 0.0)) return 0;
  std::int64_t total = 0;
  while (mean > kPoissonChunk) {
    total += poisson_inversion(kPoissonChunk, rng);
    mean -= kPoissonChunk;
  }
  return total + poisson_inversion(mean, rng);
}

std::int64_t draw_lomax(double shape, double scale, SeededRng& rng) {
  const double u = rng.uniform01();
  const double value = scale * (std::pow(1.0 - u, -1.0 / shape) - 1.0);
  return std::llround(value);
}

std::int64_t draw_iterated_poisson(double mu, int n, SeededRng& rng) {
  std::int64_t x = draw_poisson(mu, rng);
  for (int i = 2; i <= n; ++i) x = draw_poisson(static_cast<double>(x), rng);
  return x;
}

std::int64_t draw(const DistributionSpec& spec, SeededRng& rng) {
  switch (spec.kind) {
    case DistributionSpec::Kind::poisson:
      return draw_poisson(spec.mean, rng);
    case DistributionSpec::Kind::lomax:
      return draw_lomax(spec.shape, spec.scale, rng);
    case DistributionSpec::Kind::iterated_poisson:
      return draw_iterated_poisson(spec.mu, spec.n, rng);
  }
  return 0;
}

std::vector<std::int64_t> generate(const DistributionSpec& spec,
                                   std::size_t length, SeededRng& rng) {
  spec.validate();
  std::vector<std::int64_t> counts(length);
  for (auto& c : counts) c = draw(spec, rng);
  return counts;
}

std::vector<std::int64_t> perturb(const std::vector<std::int64_t>& counts,
                                  const NoiseSpec& noise,
                                  const DistributionSpec& spec, SeededRng& rng) {
  noise.validate();
  spec.validate();
  const double p = noise.replacement_rate;
  std::vector<std::int64_t> out = counts;
  for (auto& c : out) {
    if (rng.uniform01() < p) c = 0;
    if (rng.uniform01() < p) c += draw(spec, rng);
  }
  return out;
}

TcpPrediction make_prediction(const TcpInstance& perturbed,
                              const TcpInstance* real) {
  TcpPrediction prediction;
  const auto opt = offline_opt_tcp(perturbed);
  prediction.acks = opt.ack_times;
  const TimeStep length = perturbed.horizon();
  if (length == 0) return prediction;
  TimeStep last_needed = length - 1;
  if (real != nullptr) {
    last_needed = -1;
    for (TimeStep t = real->horizon(); t-- > 0;) {
      if (real->counts[static_cast<std::size_t>(t)] > 0) {
        last_needed = t;
        break;
      }
    }
  }
  if (prediction.acks.empty() || prediction.acks.back() < last_needed) {
    prediction.acks.push_back(std::max(length, real ? real->horizon() : 0) - 1);
  }
  return prediction;
}

}  // namespace pdla
