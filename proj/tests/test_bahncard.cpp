#include <gtest/gtest.h>

#include <cmath>

#include "pdla/bahncard.hpp"
#include "pdla_tools/random_instances.hpp"

using namespace pdla;

namespace {

BahncardInstance make(std::vector<TimeStep> trips, double B, double beta, TimeStep T) {
  BahncardInstance inst;
  inst.trips = std::move(trips);
  inst.B = B;
  inst.beta = beta;
  inst.T = T;
  return inst;
}

}  // namespace

TEST(Bahncard, NoTrips) {
  const auto inst = make({}, 5.0, 0.2, 10);
  const auto run = run_pdla_bahncard(inst, {{0}}, 0.5);
  EXPECT_EQ(run.cost(), 0.0);
  EXPECT_TRUE(check_bahncard_dual(run, inst).ok);
  EXPECT_EQ(offline_opt_bahncard(inst).cost, 0.0);
}

TEST(Bahncard, SingleUncoveredTripIsOneSmallUpdate) {
  for (double lambda : {0.2, 0.5, 1.0}) {
    const auto inst = make({7}, 5.0, 0.3, 10);
    const auto run = run_pdla_bahncard(inst, {}, lambda);
    ASSERT_EQ(run.trips.size(), 1u);
    EXPECT_EQ(run.trips[0].kind, BahncardUpdate::small);
    const double e = bahncard_exp(1.0 / lambda, 5.0, 0.3);
    EXPECT_NEAR(run.cost(), (e - 0.3) / (e - 1.0), 1e-12);
    const auto chk = check_bahncard_dual(run, inst);
    EXPECT_NEAR(chk.max_window_sum, lambda * 0.7, 1e-12);
    EXPECT_TRUE(chk.ok);
  }
}

TEST(Bahncard, WorstCaseIntervalIsAllBigUpdates) {
  const double B = 5.0, beta = 0.2, lambda = 0.5;
  const auto m = ceil_count(lambda * B / (1.0 - beta));
  ASSERT_EQ(m, 4);
  std::vector<TimeStep> trips;
  for (TimeStep t = 0; t < m; ++t) trips.push_back(t);
  const auto inst = make(trips, B, beta, 10);
  const auto run = run_pdla_bahncard(inst, {{0}}, lambda);
  for (const auto& t : run.trips) EXPECT_EQ(t.kind, BahncardUpdate::big);
  EXPECT_NEAR(run.cost(), m * bahncard_update_cost(lambda, B, beta), 1e-9);
  ASSERT_EQ(run.interval_cost.size(), 1u);
  const auto b = bahncard_bounds(inst, {{0}}, lambda);
  EXPECT_NEAR(run.interval_cost[0], b.interval_ratio * (B + beta * m), 1e-9);
}

TEST(Bahncard, UpdateCostFormula) {
  const double e = bahncard_exp(1.0, 4.0, 0.5);
  EXPECT_NEAR(e, std::pow(1.0 + 0.5 / 4.0, 8.0), 1e-12);
  EXPECT_NEAR(bahncard_update_cost(1.0, 4.0, 0.5), (e - 0.5) / (e - 1.0), 1e-15);
}

TEST(Bahncard, BetaOneIsDegenerate) {
  const auto inst = make({1}, 5.0, 1.0, 10);
  EXPECT_THROW(run_pdla_bahncard(inst, {}, 0.5), DomainError);
}

TEST(Bahncard, ValidateRejectsBadInput) {
  EXPECT_THROW(make({3, 1}, 5.0, 0.2, 10).validate(), DomainError);
  EXPECT_THROW(make({1}, 0.0, 0.2, 10).validate(), DomainError);
  EXPECT_THROW(make({1}, 5.0, 0.2, 0).validate(), DomainError);
}

TEST(BahncardNormalize, PostponesOverlappingBuys) {
  std::size_t moved = 0;
  const auto p = normalize_bahncard_prediction({{30, 5, 0, 5}}, 10, &moved);
  EXPECT_EQ(p.cards, (std::vector<TimeStep>{0, 11, 30}));
  EXPECT_EQ(moved, 1u);
  const auto q = normalize_bahncard_prediction({{0, 3, 6}}, 10);
  EXPECT_EQ(q.cards, (std::vector<TimeStep>{0, 11, 22}));
}

TEST(BahncardOpt, SingleTripPaysFullPrice) {
  const auto o = offline_opt_bahncard(make({3}, 2.0, 0.5, 10));
  EXPECT_DOUBLE_EQ(o.cost, 1.0);
  EXPECT_TRUE(o.card_times.empty());
}

TEST(BahncardOpt, SimultaneousTripsBuyCard) {
  for (int m = 1; m <= 10; ++m) {
    const auto inst = make(std::vector<TimeStep>(m, 4), 2.0, 0.25, 5);
    const double expected = std::min<double>(m, 2.0 + 0.25 * m);
    EXPECT_DOUBLE_EQ(offline_opt_bahncard(inst).cost, expected);
    EXPECT_DOUBLE_EQ(brute_force_bahncard(inst), expected);
  }
}

TEST(BahncardOpt, DpMatchesBruteForce) {
  SeededRng rng(21, 0);
  for (int i = 0; i < 100; ++i) {
    const auto inst = pdla::tools::random_bahncard_instance(rng, 12);
    ASSERT_NEAR(offline_opt_bahncard(inst).cost, brute_force_bahncard(inst), 1e-9);
  }
}

TEST(BahncardOpt, SizeCaps) {
  const auto inst = make(std::vector<TimeStep>(13, 0), 2.0, 0.25, 5);
  EXPECT_THROW(brute_force_bahncard(inst), SizeError);
}

TEST(BahncardPredictionCost, CountsCardsAndUncoveredTrips) {
  const auto inst = make({0, 2, 20, 40}, 3.0, 0.5, 5);
  const auto pc = prediction_cost_bahncard(inst, {{0, 40}});
  EXPECT_EQ(pc.uncovered_trips, 1);
  EXPECT_DOUBLE_EQ(pc.s_cost, (3.0 + 2 * 0.5) + (3.0 + 0.5) + 1.0);
}

TEST(BahncardBounds, LambdaOneCoefficientsCoincide) {
  const auto inst = make({0, 1, 2, 3, 4, 5, 6}, 3.0, 0.2, 100);
  const auto b = bahncard_bounds(inst, {{0}}, 1.0);
  const double big = bahncard_update_cost(1.0, 3.0, 0.2);
  EXPECT_NEAR(b.robustness_bound, big * (1.0 + 0.8 / 3.0) * b.opt, 1e-12);
  const auto run = run_pdla_bahncard(inst, {{0}}, 1.0);
  EXPECT_LE(run.cost(), b.consistency_bound + 1e-9);
  EXPECT_LE(run.cost(), b.robustness_bound + 1e-9);
}

TEST(BahncardBounds, ZeroBetaLongValidityBehavesLikeSkiRental) {
  // 20 trips, card cost 10, never expires: opt = 10.
  std::vector<TimeStep> trips;
  for (TimeStep t = 0; t < 20; ++t) trips.push_back(t);
  const auto inst = make(trips, 10.0, 0.0, 1000);
  const auto b = bahncard_bounds(inst, {{0}}, 1.0);
  EXPECT_DOUBLE_EQ(b.opt, 10.0);
  EXPECT_DOUBLE_EQ(b.s_cost, 10.0);
  const auto run = run_pdla_bahncard(inst, {{0}}, 1.0);
  EXPECT_NEAR(run.cost(), 10.0 / (1.0 - std::pow(1.1, -10.0)), 1e-9);
}

TEST(BahncardRounding, BuysTrackMass) {
  const auto inst = make({0, 0, 1, 2, 3, 50, 51}, 4.0, 0.3, 10);
  const auto run = run_pdla_bahncard(inst, {{0}}, 0.6);
  SeededRng rng(5, 0);
  double sum = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double c = round_bahncard(run, inst, rng);
    ASSERT_GE(c, 0.3 * 7 - 1e-12);
    sum += c;
  }
  EXPECT_LE(sum / n, run.cost() + 0.05);
}

TEST(BahncardDual, RandomInstancesFeasible) {
  SeededRng rng(22, 0);
  for (int i = 0; i < 200; ++i) {
    const auto inst = pdla::tools::random_bahncard_instance(rng, 30);
    const auto pred = pdla::tools::random_bahncard_prediction(rng, inst);
    for (double lambda : {0.1, 0.5, 1.0}) {
      const auto run = run_pdla_bahncard(inst, pred, lambda);
      ASSERT_TRUE(check_bahncard_dual(run, inst).ok);
      for (const auto& t : run.trips) {
        ASSERT_LE(t.c, 1.0 + 1e-12);
        ASSERT_LE(t.c - t.b, inst.beta + 1e-12);
      }
    }
  }
}
