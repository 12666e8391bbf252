#include <gtest/gtest.h>

#include <cmath>

#include "pdla/tcpack.hpp"
#include "pdla_tools/random_instances.hpp"

using namespace pdla;

TEST(Alpha, NextAckAtOrAfter) {
  const TcpPrediction p{{5, 9}};
  EXPECT_EQ(alpha(p, 5), 5);
  EXPECT_EQ(alpha(p, 6), 9);
  EXPECT_EQ(alpha(p, 0), 5);
  EXPECT_EQ(alpha(p, 10), kNoAck);
  EXPECT_EQ(alpha(TcpPrediction{}, 0), kNoAck);
}

TEST(Tcp, NoPackets) {
  const TcpInstance inst{{0, 0, 0}, 10};
  const auto run = run_pdla_tcp(inst, {}, 0.5);
  EXPECT_EQ(run.cost(), 0.0);
  EXPECT_EQ(offline_opt_tcp(inst).cost, 0.0);
  EXPECT_EQ(brute_force_tcp(inst), 0.0);
  SeededRng rng(1, 0);
  EXPECT_EQ(round_tcp(run, rng), 0.0);
  const auto b = tcp_bounds(inst, {}, 0.5);
  EXPECT_EQ(b.robustness_bound, 0.0);
}

TEST(Tcp, TrustedImmediateAckUsesBigUpdates) {
  const std::int64_t d = 100;
  for (double lambda : {0.2, 0.5, 0.8, 1.0}) {
    const TcpInstance inst{{1}, d};
    const auto run = run_pdla_tcp(inst, {{0}}, lambda);
    const double per = (1.0 / d) / (1.0 - discrete_exp(-lambda, d));
    EXPECT_LE(run.big_updates, ceil_count(lambda * d));
    EXPECT_EQ(run.small_updates, 0);
    for (const auto& u : run.updates) {
      EXPECT_TRUE(u.big);
      EXPECT_NEAR(u.delta_primal, per, 1e-12 * per);
    }
    EXPECT_LE(run.cost(), (ceil_count(lambda * d) / double(d)) /
                                  (1.0 - discrete_exp(-lambda, d)) + 1e-9);
  }
}

TEST(Tcp, EmptyPredictionUsesSmallUpdates) {
  const std::int64_t d = 10;
  const TcpInstance inst{{1}, d};
  const auto run = run_pdla_tcp(inst, {}, 0.5);
  EXPECT_EQ(run.big_updates, 0);
  EXPECT_EQ(run.small_updates, ceil_count(d / 0.5));
  const double per = (1.0 / d) / (1.0 - discrete_exp(-2.0, d));
  for (const auto& u : run.updates) EXPECT_NEAR(u.delta_primal, per, 1e-12);
}

TEST(Tcp, LambdaOneIgnoresPrediction) {
  SeededRng rng(31, 0);
  for (int i = 0; i < 50; ++i) {
    const auto inst = pdla::tools::random_tcp_instance(rng, 20);
    const auto a = run_pdla_tcp(inst, pdla::tools::random_tcp_prediction(rng, inst), 1.0);
    const auto b = run_online_tcp(inst);
    ASSERT_EQ(a.x.values(), b.x.values());
    ASSERT_EQ(a.cost(), b.cost());
  }
}

TEST(TcpOpt, SingleBurst) {
  const TcpInstance inst{{0, 0, 7, 0}, 100};
  const auto o = offline_opt_tcp(inst);
  EXPECT_DOUBLE_EQ(o.cost, 1.0);
  EXPECT_EQ(o.ack_times, std::vector<TimeStep>{2});
  EXPECT_DOUBLE_EQ(brute_force_tcp(inst), 1.0);
}

TEST(TcpOpt, TwoPackets) {
  for (std::int64_t k : {1, 5, 50, 100, 150}) {
    std::vector<std::int64_t> counts(k + 1, 0);
    counts[0] = 1;
    counts[k] = 1;
    const TcpInstance inst{counts, 100};
    const double expected = std::min(2.0, 1.0 + k / 100.0);
    EXPECT_NEAR(offline_opt_tcp(inst).cost, expected, 1e-12);
    EXPECT_NEAR(brute_force_tcp(inst), expected, 1e-12);
  }
}

TEST(TcpOpt, DpMatchesBruteForce) {
  SeededRng rng(32, 0);
  for (int i = 0; i < 100; ++i) {
    const auto inst = pdla::tools::random_tcp_instance(rng, 8);
    ASSERT_NEAR(offline_opt_tcp(inst).cost, brute_force_tcp(inst), 1e-9);
  }
}

TEST(TcpPredictionCost, OptimalScheduleCostsOpt) {
  SeededRng rng(33, 0);
  for (int i = 0; i < 50; ++i) {
    const auto inst = pdla::tools::random_tcp_instance(rng, 12);
    const auto o = offline_opt_tcp(inst);
    const auto pc = prediction_cost_tcp(inst, {o.ack_times});
    ASSERT_TRUE(pc.covers_all);
    ASSERT_NEAR(pc.s_cost, o.cost, 1e-9);
  }
}

TEST(TcpPredictionCost, EmptyPredictionDoesNotCover) {
  const auto pc = prediction_cost_tcp({{1}, 10}, {});
  EXPECT_FALSE(pc.covers_all);
  EXPECT_TRUE(std::isinf(pc.s_cost));
}

TEST(TcpPredictionCost, Latency) {
  const auto pc = prediction_cost_tcp({{0, 0, 0, 1}, 100}, {{7}});
  EXPECT_EQ(pc.n_acks, 1);
  EXPECT_NEAR(pc.latency, 0.04, 1e-15);
  EXPECT_NEAR(pc.s_cost, 1.04, 1e-15);
}

TEST(TcpBounds, LimitConstants) {
  const TcpInstance inst{{1}, 100000};
  const auto b1 = tcp_bounds(inst, {{0}}, 1.0, 1.0);
  EXPECT_NEAR(b1.robustness_bound, 1.58, 0.005);
  const auto b4 = tcp_bounds(inst, {{0}}, 0.4, 1.0);
  EXPECT_NEAR(b4.robustness_bound, 3.03, 0.005);
}

TEST(TcpRounding, UnitJumpGivesSingleAck) {
  const auto run = run_pdla_tcp({{1}, 1}, {}, 1.0);
  ASSERT_NEAR(run.x[0], 1.0, 1e-12);
  SeededRng rng(2, 0);
  for (int i = 0; i < 100; ++i) EXPECT_DOUBLE_EQ(round_tcp(run, rng), 1.0);
}

TEST(TcpRounding, LpObjectiveNeverExceedsLedger) {
  SeededRng rng(34, 0);
  for (int i = 0; i < 100; ++i) {
    const auto inst = pdla::tools::random_tcp_instance(rng, 20);
    const auto run =
        run_pdla_tcp(inst, pdla::tools::random_tcp_prediction(rng, inst), 0.5);
    ASSERT_LE(tcp_lp_objective(run), run.cost() + 1e-9);
  }
}

TEST(TcpDual, RandomInstancesFeasible) {
  SeededRng rng(35, 0);
  for (int i = 0; i < 200; ++i) {
    const auto inst = pdla::tools::random_tcp_instance(rng, 30);
    const auto pred = pdla::tools::random_tcp_prediction(rng, inst);
    for (double lambda : {0.1, 0.5, 1.0}) {
      const auto chk = check_tcp_dual(run_pdla_tcp(inst, pred, lambda));
      ASSERT_TRUE(chk.ok);
      ASSERT_LE(chk.scale_needed, 1.0 + 1.0 / inst.d + 1e-9);
    }
  }
}

TEST(Tcp, ValidateRejectsBadInput) {
  EXPECT_THROW(TcpInstance({{-1}, 10}).validate(), DomainError);
  EXPECT_THROW(TcpInstance({{1}, 0}).validate(), DomainError);
  EXPECT_THROW(TcpPrediction({{3, 3}}).validate(), DomainError);
  EXPECT_THROW(TcpPrediction({{-1}}).validate(), DomainError);
}
