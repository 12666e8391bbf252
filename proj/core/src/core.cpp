#include "pdla/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pdla {

void EpsilonPolicy::validate() const {
  for (double v : {coverage_eps, ledger_eps, inequality_grid_eps}) {
    if (!(v > 0.0 && v < 1e-3)) {
      throw DomainError("epsilon values must lie in (0, 1e-3)");
    }
  }
}

double discrete_exp(double z, double scale) {
  if (!(scale > 0.0)) throw DomainError("discrete_exp: scale must be > 0");
  return std::exp(z * scale * std::log1p(1.0 / scale));
}

std::int64_t ceil_count(double x) {
  const double nearest = std::round(x);
  if (std::abs(x - nearest) <= 1e-9 * std::max(1.0, std::abs(x))) {
    return static_cast<std::int64_t>(nearest);
  }
  return static_cast<std::int64_t>(std::ceil(x));
}

void require_lambda(double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) {
    std::ostringstream os;
    os << "lambda must lie in (0, 1], got " << lambda;
    throw DomainError(os.str());
  }
}

void MonotoneVarStore::raise_to(std::size_t id, double value) {
  const double old_value = get(id);
  if (!std::isfinite(value) || value < old_value) {
    std::ostringstream os;
    os << "variable " << id << " cannot move from " << old_value << " to "
       << value;
    throw MonotonicityError(os.str());
  }
  if (id >= values_.size()) values_.resize(id + 1, 0.0);
  values_[id] = value;
  if (keep_history_) history_.push_back({id, old_value, value});
}

void MonotoneVarStore::add(std::size_t id, double delta) {
  if (!(delta >= 0.0) || !std::isfinite(delta)) {
    std::ostringstream os;
    os << "variable " << id << ": invalid increment " << delta;
    throw MonotonicityError(os.str());
  }
  raise_to(id, get(id) + delta);
}

double MonotoneVarStore::sum() const {
  double s = 0.0;
  for (double v : values_) s += v;
  return s;
}

namespace {

void require_increment(double amount, const char* what) {
  if (!(amount >= 0.0) || !std::isfinite(amount)) {
    std::ostringstream os;
    os << "ledger: " << what << " increment must be finite and >= 0, got "
       << amount;
    throw MonotonicityError(os.str());
  }
}

}  // namespace

void CostLedger::charge_prediction(double amount) {
  require_increment(amount, "primal");
  prediction_charged_ += amount;
  primal_total_ += amount;
}

void CostLedger::charge_other(double amount) {
  require_increment(amount, "primal");
  other_ += amount;
  primal_total_ += amount;
}

void CostLedger::add_dual(double amount) {
  require_increment(amount, "dual");
  dual_total_ += amount;
}

bool CostLedger::decomposition_holds(double eps) const {
  return std::abs(primal_total_ - (prediction_charged_ + other_)) <=
         eps * std::max(1.0, primal_total_);
}

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t hash_seed(std::initializer_list<std::uint64_t> words) {
  std::uint64_t h = 0x6a09e667f3bcc909ULL;
  for (std::uint64_t w : words) h = mix64(h ^ mix64(w + kGolden));
  return h;
}

SeededRng::SeededRng(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed),
      stream_(stream),
      state_(mix64(mix64(seed) ^ mix64(stream + kGolden))) {}

std::uint64_t SeededRng::next_u64() {
  state_ += kGolden;
  return mix64(state_);
}

double SeededRng::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

}  // namespace pdla
