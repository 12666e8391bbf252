#include <gtest/gtest.h>

#include <cmath>

#include "pdla/skirental.hpp"

using namespace pdla;

TEST(Ski, NoDaysCostsNothing) {
  const auto run = run_pdla_ski({0, 10}, {3}, 0.5);
  EXPECT_EQ(run.cost(), 0.0);
  EXPECT_EQ(run.updates, 0);
  SeededRng rng(1, 0);
  EXPECT_EQ(round_ski(run, rng), 0.0);
}

TEST(Ski, TrustedBuyPredictionUsesHundredBigUpdates) {
  const auto run = run_pdla_ski({100, 100}, {200}, 1.0);
  EXPECT_TRUE(run.buy_branch);
  EXPECT_EQ(run.updates, 100);
  const double per_update = 1.0 / (1.0 - std::pow(1.01, -100.0));
  EXPECT_NEAR(run.cost(), 100 * per_update, 1e-9);
  EXPECT_NEAR(run.cost(), 158.66, 0.01);
  EXPECT_NEAR(run.x, 1.0, 1e-12);
  // x(k) = (e(k/B) - 1)/(e(lambda) - 1)
  const double e1 = std::pow(1.01, 100.0);
  for (int k : {1, 10, 50, 99}) {
    EXPECT_NEAR(run.x_after[k], (std::pow(1.01, k) - 1.0) / (e1 - 1.0), 1e-12);
  }
}

TEST(Ski, SingleSmallUpdate) {
  const auto run = run_pdla_ski({1, 100}, {0}, 0.5);
  EXPECT_FALSE(run.buy_branch);
  EXPECT_EQ(run.updates, 1);
  const double e2 = std::pow(1.01, 200.0);
  EXPECT_NEAR(run.cost(), 1.0 + 1.0 / (e2 - 1.0), 1e-12);
  EXPECT_DOUBLE_EQ(run.y[1], 0.5);
}

TEST(Ski, UpdateCountBounds) {
  for (std::int64_t B : {1, 3, 10, 37}) {
    for (double lambda : {0.1, 0.3, 0.7, 1.0}) {
      for (std::int64_t N : {B / 2, B, 3 * B, 10 * B}) {
        const auto buy = run_pdla_ski({N, B}, {B}, lambda);
        EXPECT_LE(buy.updates, ceil_count(lambda * B));
        const auto rent = run_pdla_ski({N, B}, {B - 1}, lambda);
        EXPECT_LE(rent.updates, std::min<std::int64_t>(N, ceil_count(B / lambda)));
      }
    }
  }
}

TEST(Ski, LambdaOneMatchesOnlineAlgorithm) {
  for (std::int64_t n_pred : {0, 50}) {
    const auto a = run_pdla_ski({40, 20}, {n_pred}, 1.0);
    const auto b = run_online_ski({40, 20});
    EXPECT_EQ(a.x_after, b.x_after);
    EXPECT_EQ(a.f, b.f);
    EXPECT_EQ(a.y, b.y);
  }
}

TEST(Ski, DualBudget) {
  for (std::int64_t B : {1, 2, 10, 100}) {
    for (double lambda : {0.1, 0.5, 1.0}) {
      for (std::int64_t n_pred : {std::int64_t{0}, 2 * B}) {
        const auto run = run_pdla_ski({3 * B, B}, {n_pred}, lambda);
        const auto chk = check_ski_dual(run);
        EXPECT_DOUBLE_EQ(chk.bound, static_cast<double>(B) + run.c_prime);
        EXPECT_TRUE(chk.ok) << B << " " << lambda;
      }
    }
  }
}

TEST(SkiBounds, LargeBApproachesEOverEMinusOne) {
  const std::int64_t B = 100000;
  const auto b = ski_bounds({B, B}, {B}, 1.0);
  const double target = std::exp(1.0) / (std::exp(1.0) - 1.0) * B;
  EXPECT_NEAR(b.consistency_bound / target, 1.0, 1e-4);
  EXPECT_NEAR(b.robustness_bound / target, 1.0, 1e-4);
}

TEST(SkiBounds, ZeroDays) {
  const auto b = ski_bounds({0, 10}, {5}, 0.5);
  EXPECT_EQ(b.opt, 0.0);
  EXPECT_EQ(b.robustness_bound, 0.0);
}

TEST(SkiBounds, RentPredictionFormulas) {
  const auto b = ski_bounds({50, 100}, {10}, 0.5);
  EXPECT_EQ(b.s_cost, 50.0);
  EXPECT_EQ(b.opt, 50.0);
  const double em = std::pow(1.01, -50.0);
  EXPECT_NEAR(b.plain_consistency_bound, 0.5 / (1.0 - em) * 50.0, 1e-9);
  EXPECT_NEAR(b.plain_robustness_bound, 50.0 / (1.0 - em), 1e-9);
  // lambda B and B/lambda are integral here, so the corrections vanish.
  EXPECT_NEAR(b.consistency_bound, b.plain_consistency_bound, 1e-9);
  EXPECT_NEAR(b.robustness_bound, b.plain_robustness_bound, 1e-9);
}

TEST(SkiRounding, ImmediateJumpIsDeterministic) {
  const auto run = run_pdla_ski({5, 1}, {5}, 1.0);
  ASSERT_NEAR(run.x_after[1], 1.0, 1e-12);
  SeededRng rng(3, 0);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(round_ski(run, rng), 1.0);
}

TEST(SkiRounding, ExpectationEqualsTightObjective) {
  // Integrate the realized cost over p exactly: it is piecewise constant
  // with breakpoints at the x_after values.
  for (const auto& [N, B, n_pred, lambda] :
       {std::tuple{7, 10, 3, 1.0}, {30, 100, 0, 0.5}, {100, 100, 200, 1.0},
        {12, 5, 1, 0.3}}) {
    const auto run = run_pdla_ski({N, B}, {n_pred}, lambda);
    double expected = 0.0;
    double prev = 0.0;
    for (std::size_t j = 1; j < run.x_after.size(); ++j) {
      const double cur = std::min(run.x_after[j], 1.0);
      // p in (prev, cur]: rent j-1 days then buy.
      expected += (cur - prev) * (static_cast<double>(j - 1) + B);
      prev = cur;
    }
    expected += (1.0 - prev) * static_cast<double>(N);
    EXPECT_NEAR(ski_lp_objective(run), expected, 1e-9);
    EXPECT_LE(ski_lp_objective(run), run.cost() + 1e-12);
  }
}

TEST(Certificate, LambdaOne) {
  const auto c = verify_lower_bound_certificate(1.0, 100000);
  EXPECT_NEAR(c.dual_objective, 1.5820, 1e-4);
  EXPECT_LE(c.max_constraint_violation, 1e-6);
  EXPECT_NEAR(c.first_constraint_integral, 1.0, 1e-8);
}

TEST(Certificate, LambdaHalf) {
  const auto c = verify_lower_bound_certificate(0.5, 100000);
  EXPECT_NEAR(c.dual_objective, 2.5415, 1e-4);
  EXPECT_NEAR(c.dual_objective, 1.0 / (1.0 - std::exp(-0.5)), 1e-8);
  EXPECT_LE(c.max_constraint_violation, 1e-6);
}

TEST(Certificate, RejectsCoarseGrid) {
  EXPECT_THROW(verify_lower_bound_certificate(0.5, 999), DomainError);
  EXPECT_THROW(verify_lower_bound_certificate(0.0, 1000), DomainError);
}

TEST(Ski, ValidateRejectsBadInput) {
  EXPECT_THROW(SkiInstance({-1, 5}).validate(), DomainError);
  EXPECT_THROW(SkiInstance({3, 0}).validate(), DomainError);
  EXPECT_THROW(run_pdla_ski({3, 5}, {1}, 0.0), DomainError);
}
