#pragma once

// Invariant suites at pinned seeds, shared by `pdla verify` and the
// acceptance test.

#include <cstdint>
#include <string>
#include <vector>

namespace pdla::tools {

struct SuiteResult {
  std::string name;
  bool ok = true;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string detail;
};

/// lambda in {0.01, ..., 1}, d in {1, 2, 5, 10, 100, 1e4}, beta in {0, 0.1, ..., 1}.
SuiteResult ratio_inequality_grid_suite();
/// All words over {a, b} up to length 12, d in 1..8, lambda in
/// {0.25, 0.5, 0.75, 1}, S0 in {0, 0.1, 0.5}.
SuiteResult recurrence_words_suite();
/// lambda in {0.1, ..., 1}: violation <= 1e-6 and objective within 1e-8
/// relative of 1/(1 - e^-lambda).
SuiteResult certificate_suite(std::int64_t grid_points = 100'000);

/// "setcover", "ski", "bahncard" or "tcp": fast oracle against exhaustive
/// enumeration on `count` random small instances, exact to 1e-9.
SuiteResult oracle_suite(const std::string& problem, int count = 200,
                         std::uint64_t seed = 1);

/// Dual feasibility after runs on `count` random small instances.
SuiteResult dual_suite(const std::string& problem, double lambda, int count = 200,
                       std::uint64_t seed = 2);

/// Every run check (feasibility, dual, bounds, ledger) on random instances.
SuiteResult run_checks_suite(const std::string& problem, double lambda,
                             int count = 200, std::uint64_t seed = 3);

/// B in {1, 2, 10, 100}, N in 0..3B, n_pred in {0, B-1, B, 3B},
/// lambda in {0.1, ..., 1}: cost <= min(consistency, robustness) + 1e-9, and
/// the plain bounds whenever lambda B and B/lambda are integers.
SuiteResult ski_grid_suite();
/// lambda = 1 reproduces the advice-free algorithm exactly on the grid.
SuiteResult ski_trace_suite();

/// Monte-Carlo mean of the rounding over `samples` draws.
SuiteResult ski_rounding_suite(int samples = 100'000, std::uint64_t seed = 11);
SuiteResult tcp_rounding_suite(int samples = 100'000, std::uint64_t seed = 5);
SuiteResult bahncard_rounding_suite(int samples = 100'000, std::uint64_t seed = 6);

/// Line of the form "PASS <name> (<checked> checked) <detail>".
std::string format(const SuiteResult& result);

}  // namespace pdla::tools
