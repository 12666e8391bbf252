#include <cmath>
#include <sstream>

#include "pdla/core.hpp"

namespace pdla {

namespace {

// All comparisons are rewritten in terms of e^-z so that small lambda
// (large 1/lambda) does not overflow.

// lambda/(1-e^-lambda) vs 1/(1-e^-(1/lambda)), where log_base = ln e(1).
double margin_ratio(double lambda, double log_base) {
  const double lhs = lambda / -std::expm1(-lambda * log_base);
  const double rhs = 1.0 / -std::expm1(-log_base / lambda);
  return lhs - rhs;
}

// 1/(e^lambda-1) vs ((1-lambda)/lambda e^(1/lambda) + 1)/(e^(1/lambda)-1).
double margin_rate(double lambda, double log_base) {
  const double lhs = 1.0 / std::expm1(lambda * log_base);
  const double inv_big = std::exp(-log_base / lambda);
  const double rhs =
      ((1.0 - lambda) / lambda + inv_big) / -std::expm1(-log_base / lambda);
  return lhs - rhs;
}

// (e^z - beta)/(e^z - 1) written as (1 - beta e^-z)/(1 - e^-z).
double discount_ratio(double z, double beta) {
  return (1.0 - beta * std::exp(-z)) / -std::expm1(-z);
}

}  // namespace

bool RatioInequalities::all() const {
  for (bool h : holds) {
    if (!h) return false;
  }
  return true;
}

RatioInequalities check_ratio_inequalities(double lambda, double d, double beta,
                                           double eps) {
  require_lambda(lambda);
  if (!(d > 0.0)) throw DomainError("check_ratio_inequalities: d must be > 0");
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw DomainError("check_ratio_inequalities: beta must lie in [0, 1]");
  }
  const double log_e = 1.0;
  const double log_finite = d * std::log1p(1.0 / d);

  RatioInequalities r;
  r.margin[0] = margin_ratio(lambda, log_e);
  r.margin[1] = margin_ratio(lambda, log_finite);
  r.margin[2] = margin_rate(lambda, log_e);
  r.margin[3] = margin_rate(lambda, log_finite);

  const double big = discount_ratio(lambda, beta);
  const double small = discount_ratio(1.0 / lambda, beta);
  r.margin[4] = lambda / (1.0 - beta + beta * lambda) * big - small;
  r.margin[5] = (lambda + beta - beta * lambda) * big - small;

  for (int k = 0; k < 6; ++k) r.holds[k] = r.margin[k] >= -eps;
  return r;
}

RecurrenceWordResult check_recurrence_word(double s0, std::string_view word,
                                           double lambda, double d, double eps) {
  require_lambda(lambda);
  if (!(d > 0.0)) throw DomainError("check_recurrence_word: d must be > 0");
  if (!(s0 >= 0.0)) throw DomainError("check_recurrence_word: S0 must be >= 0");

  const double growth = 1.0 + 1.0 / d;
  const double add_a = 1.0 / (d * std::expm1(lambda * d * std::log1p(1.0 / d)));
  const double add_b = 1.0 / (d * std::expm1(d / lambda * std::log1p(1.0 / d)));

  double value = s0;
  std::size_t count_a = 0;
  std::size_t count_b = 0;
  for (char c : word) {
    if (c == 'a') {
      value = growth * value + add_a;
      ++count_a;
    } else if (c == 'b') {
      value = growth * value + add_b;
      ++count_b;
    } else {
      std::ostringstream os;
      os << "check_recurrence_word: invalid letter '" << c << "'";
      throw DomainError(os.str());
    }
  }
  const double weight =
      static_cast<double>(count_a) + lambda * static_cast<double>(count_b);
  RecurrenceWordResult r;
  r.final_value = value;
  r.satisfied = weight < d || value >= 1.0 - eps;
  return r;
}

}  // namespace pdla
