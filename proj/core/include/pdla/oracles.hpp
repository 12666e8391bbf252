#pragma once

// One entry point for offline optima and prediction costs across problems,
// plus plain exhaustive enumerators used to cross-check the fast oracles.

#include <chrono>
#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "pdla/bahncard.hpp"
#include "pdla/setcover.hpp"
#include "pdla/skirental.hpp"
#include "pdla/tcpack.hpp"

namespace pdla {

enum class OracleMethod { dp, brute_force, closed_form };

std::string_view to_string(OracleMethod method);

using AnyInstance =
    std::variant<CoverInstance, SkiInstance, BahncardInstance, TcpInstance>;
using AnyPrediction = std::variant<CoverPrediction, SkiPrediction,
                                   BahncardPrediction, TcpPrediction>;

struct OracleReport {
  double opt_cost = 0.0;
  /// Set ids for set cover, buy day for ski rental (empty when renting
  /// throughout), card times for Bahncard, ack times for TCP.
  std::vector<std::int64_t> witness;
  OracleMethod method = OracleMethod::closed_form;
  std::chrono::nanoseconds elapsed{0};
};

/// Set cover: branch and bound; ski: min(N, B); Bahncard and TCP: DP.
OracleReport opt(const AnyInstance& instance);

/// Cost of following the prediction. Throws DomainError when the instance
/// and prediction belong to different problems.
double s_cost(const AnyInstance& instance, const AnyPrediction& prediction);

inline constexpr std::size_t kMaxPlainEnumerationSets = 20;

/// Plain 2^m enumeration of set families, without pruning.
double brute_force_setcover(const CoverInstance& instance);

}  // namespace pdla
