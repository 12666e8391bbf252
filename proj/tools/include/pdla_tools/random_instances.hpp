#pragma once

// Small random instances and predictions for property checks and oracle
// cross-checks. Sizes stay within the exhaustive oracles' caps.

#include <cstdint>

#include "pdla/bahncard.hpp"
#include "pdla/core.hpp"
#include "pdla/setcover.hpp"
#include "pdla/skirental.hpp"
#include "pdla/tcpack.hpp"

namespace pdla::tools {

/// Uniform integer in [lo, hi].
std::int64_t uniform_int(SeededRng& rng, std::int64_t lo, std::int64_t hi);
double uniform_real(SeededRng& rng, double lo, double hi);

/// Up to max_n elements and max_m sets, weights in [1, 5], every element in
/// at least one set.
CoverInstance random_cover_instance(SeededRng& rng, std::size_t max_n = 8,
                                    std::size_t max_m = 8);
CoverPrediction random_cover_prediction(SeededRng& rng,
                                        const CoverInstance& instance);

SkiInstance random_ski_instance(SeededRng& rng, std::int64_t max_B = 20);
SkiPrediction random_ski_prediction(SeededRng& rng, const SkiInstance& instance);

/// Up to max_trips trips in [0, 30], B in [0.5, 6], beta in [0, 0.9],
/// T in [1, 10].
BahncardInstance random_bahncard_instance(SeededRng& rng,
                                          std::size_t max_trips = 12);
BahncardPrediction random_bahncard_prediction(SeededRng& rng,
                                              const BahncardInstance& instance);

/// Up to max_steps distinct arrival steps in a horizon of at most 40, with
/// d drawn from {1, 2, 5, 10, 50, 100} unless given.
TcpInstance random_tcp_instance(SeededRng& rng, std::size_t max_steps = 12,
                                std::int64_t d = 0);
TcpPrediction random_tcp_prediction(SeededRng& rng, const TcpInstance& instance);

}  // namespace pdla::tools
