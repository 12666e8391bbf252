#pragma once

// Random packet-arrival instances (Poisson, Lomax, iterated Poisson), the
// replacement-rate noise model and predictions built from perturbed
// instances. Every sampler draws only from SeededRng::next_u64 so sequences
// are identical across platforms and standard libraries.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pdla/core.hpp"
#include "pdla/tcpack.hpp"

namespace pdla {

struct DistributionSpec {
  enum class Kind { poisson, lomax, iterated_poisson };

  Kind kind = Kind::poisson;
  double mean = 1.0;   ///< poisson
  double shape = 2.0;  ///< lomax
  double scale = 1.0;  ///< lomax
  double mu = 1.0;     ///< iterated_poisson
  int n = 10;          ///< iterated_poisson chain length

  static DistributionSpec poisson(double mean = 1.0);
  static DistributionSpec lomax(double shape = 2.0, double scale = 1.0);
  static DistributionSpec iterated_poisson(double mu = 1.0, int n = 10);

  void validate() const;
  /// "poisson", "pareto" or "iterated-poisson".
  std::string name() const;
};

/// Accepts the names produced by DistributionSpec::name() and returns the
/// default parameters for that family. Throws DomainError otherwise.
DistributionSpec parse_distribution(std::string_view name);

struct NoiseSpec {
  double replacement_rate = 0.0;

  void validate() const;
};

/// Poisson variate by inversion; means above 30 are split into chunks.
std::int64_t draw_poisson(double mean, SeededRng& rng);

/// Lomax variate scale((1-u)^(-1/shape) - 1), rounded to the nearest integer.
std::int64_t draw_lomax(double shape, double scale, SeededRng& rng);

/// X_1 ~ P(mu), X_i ~ P(X_{i-1}); returns X_n.
std::int64_t draw_iterated_poisson(double mu, int n, SeededRng& rng);

std::int64_t draw(const DistributionSpec& spec, SeededRng& rng);

std::vector<std::int64_t> generate(const DistributionSpec& spec,
                                   std::size_t length, SeededRng& rng);

/// Per entry, independently: with probability p set it to 0, then with
/// probability p add a fresh draw from `spec`.
std::vector<std::int64_t> perturb(const std::vector<std::int64_t>& counts,
                                  const NoiseSpec& noise,
                                  const DistributionSpec& spec, SeededRng& rng);

/// Optimal ack schedule of the perturbed instance. One ack is appended at the
/// last step when the schedule is empty or ends before the last arrival of
/// `real` (or before the last step, when `real` is not given), so every real
/// packet is eventually acked.
TcpPrediction make_prediction(const TcpInstance& perturbed,
                              const TcpInstance* real = nullptr);

}  // namespace pdla
