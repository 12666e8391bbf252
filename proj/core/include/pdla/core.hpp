#pragma once

// Shared primitives for the primal-dual learning-augmented algorithms:
// error types, tolerance policy, monotone variable storage, cost ledgers,
// a portable seeded RNG and the discretized exponential used by every
// problem module.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pdla {

/// Parameter outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The instance admits no feasible solution (e.g. an element no set covers).
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input exceeds the cap of an exponential-time oracle.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A monotone variable was asked to decrease.
class MonotonicityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct EpsilonPolicy {
  /// A covering constraint is "uncovered" iff its sum < 1 - coverage_eps.
  double coverage_eps = 1e-9;
  /// Relative slack for ledger identities and bound comparisons.
  double ledger_eps = 1e-7;
  /// Slack for the numeric inequality grids.
  double inequality_grid_eps = 1e-9;

  /// Throws DomainError unless every field lies in (0, 1e-3).
  void validate() const;
};

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// (1 + 1/scale)^(z * scale). Tends to exp(z) as scale grows. The exponent
/// is not rounded: ceilings of z * scale only appear in update counts.
double discrete_exp(double z, double scale);

/// ceil(x), treating values within 1e-9 of an integer as that integer so that
/// products such as 0.6 * 100 do not round up to 61.
std::int64_t ceil_count(double x);

/// Throws DomainError unless 0 < lambda <= 1.
void require_lambda(double lambda);

/// Dense store of nonnegative reals indexed by 0..size-1 whose entries may
/// only increase. Reads past the end return 0.
class MonotoneVarStore {
 public:
  struct Update {
    std::size_t id;
    double old_value;
    double new_value;
  };

  explicit MonotoneVarStore(bool keep_history = false)
      : keep_history_(keep_history) {}

  double get(std::size_t id) const {
    return id < values_.size() ? values_[id] : 0.0;
  }
  double operator[](std::size_t id) const { return get(id); }

  /// Raises variable `id` to `value`. Throws MonotonicityError if `value` is
  /// smaller than the current value or not finite.
  void raise_to(std::size_t id, double value);
  /// Adds a nonnegative finite `delta` to variable `id`.
  void add(std::size_t id, double delta);

  std::size_t size() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }
  bool keeps_history() const { return keep_history_; }
  const std::vector<Update>& history() const { return history_; }
  double sum() const;

 private:
  bool keep_history_;
  std::vector<double> values_;
  std::vector<Update> history_;
};

/// Running primal/dual totals. Primal increments are split into the part
/// charged to the prediction in consistency arguments and the rest.
class CostLedger {
 public:
  void charge_prediction(double amount);
  void charge_other(double amount);
  void add_dual(double amount);

  double primal_total() const { return primal_total_; }
  double dual_total() const { return dual_total_; }
  double prediction_charged() const { return prediction_charged_; }
  double other() const { return other_; }

  /// primal_total == prediction_charged + other within a relative eps.
  bool decomposition_holds(double eps) const;

 private:
  double primal_total_ = 0.0;
  double dual_total_ = 0.0;
  double prediction_charged_ = 0.0;
  double other_ = 0.0;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t z);

/// Order-sensitive mix of several words into one seed.
std::uint64_t hash_seed(std::initializer_list<std::uint64_t> words);

/// SplitMix64 generator keyed by (seed, stream). The starting state is
/// mix64(mix64(seed) ^ mix64(stream + golden)); every draw advances the state
/// by the golden-ratio increment and returns its finalized value. All
/// distributions in the library are implemented on top of next_u64() so draw
/// sequences do not depend on the standard library implementation.
class SeededRng {
 public:
  using result_type = std::uint64_t;

  SeededRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform01();

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() { return next_u64(); }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t state_;
};

// ---------------------------------------------------------------------------
// Technical inequalities used by the robustness and consistency arguments.

struct RatioInequalities {
  /// holds[k] is inequality (k+1):
  ///  (1) lambda/(1-e^-lambda) >= 1/(1-e^-(1/lambda))
  ///  (2) the same with e(z) = (1+1/d)^(z d)
  ///  (3) 1/(e^lambda-1) >= ((1-lambda)/lambda e^(1/lambda) + 1)/(e^(1/lambda)-1)
  ///  (4) the same with e(z) = (1+1/d)^(z d)
  ///  (5) lambda/(1-beta+beta lambda) (e^lambda-beta)/(e^lambda-1)
  ///        >= (e^(1/lambda)-beta)/(e^(1/lambda)-1)
  ///  (6) (lambda+beta-beta lambda) (e^lambda-beta)/(e^lambda-1)
  ///        >= (e^(1/lambda)-beta)/(e^(1/lambda)-1)
  bool holds[6] = {};
  /// lhs - rhs for each inequality.
  double margin[6] = {};

  bool all() const;
};

RatioInequalities check_ratio_inequalities(double lambda, double d, double beta,
                                           double eps);

struct RecurrenceWordResult {
  double final_value = 0.0;
  bool satisfied = false;
};

/// Iterates S_{w.a} = f(S_w), S_{w.b} = g(S_w) from S0 where
/// f(x) = (1+1/d) x + 1/(d((1+1/d)^(lambda d) - 1)) and g uses d/lambda in the
/// exponent. Satisfied iff |w|_a + lambda |w|_b < d or the final value
/// is >= 1 - eps. `word` may only contain 'a' and 'b'.
RecurrenceWordResult check_recurrence_word(double s0, std::string_view word,
                                           double lambda, double d,
                                           double eps = 1e-9);

}  // namespace pdla
