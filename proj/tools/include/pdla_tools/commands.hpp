#pragma once

// Subcommands behind the `pdla` executable. Each returns the process exit
// code and writes to the given streams so tests can call them directly.
//
// Exit codes: 0 success, 1 a check failed, 2 malformed input, 3 file error,
// 4 invalid parameter.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "pdla_tools/sweep.hpp"

namespace pdla::tools {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitDomain = 4;

struct RunOptions {
  std::string problem;  ///< setcover, ski, bahncard or tcp
  std::string instance_path;
  /// Required except for ski, whose instance document carries n_pred.
  std::string prediction_path;
  std::optional<double> lambda;
  /// When set, also reports one randomized rounding drawn with this seed.
  std::optional<std::uint64_t> seed;
};

int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err);

struct SweepOptions {
  SweepSpec spec;
  std::string out_path;            ///< empty: rows go to `out`
  std::string aggregate_out_path;  ///< empty: no aggregate file
};

int cmd_sweep(const SweepOptions& options, std::ostream& out, std::ostream& err);

/// lemmas, certificates, oracles, duals or all.
int cmd_verify(const std::string& scope, std::ostream& out, std::ostream& err);

struct GenerateOptions {
  std::string dist = "poisson";
  std::size_t length = 1000;
  std::int64_t d = 100;
  std::uint64_t seed = 0;
  double replacement_rate = 0.0;
  std::string instance_out;    ///< empty: both documents go to `out`
  std::string prediction_out;
};

int cmd_generate(const GenerateOptions& options, std::ostream& out,
                 std::ostream& err);

}  // namespace pdla::tools
