#include <benchmark/benchmark.h>

#include "pdla/instancegen.hpp"
#include "pdla/oracles.hpp"
#include "pdla/tcpack.hpp"
#include "pdla_tools/random_instances.hpp"

using namespace pdla;

namespace {

TcpInstance poisson_instance(std::size_t length) {
  SeededRng rng(1, 0);
  return TcpInstance{generate(DistributionSpec::poisson(), length, rng), 100};
}

}  // namespace

static void BM_TcpRun(benchmark::State& state) {
  const auto inst = poisson_instance(static_cast<std::size_t>(state.range(0)));
  SeededRng rng(1, 1);
  const TcpInstance noisy{
      perturb(inst.counts, NoiseSpec{0.3}, DistributionSpec::poisson(), rng), inst.d};
  const auto pred = make_prediction(noisy, &inst);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_pdla_tcp(inst, pred, 0.6).cost());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TcpRun)->RangeMultiplier(4)->Range(256, 16384);

static void BM_TcpOfflineOpt(benchmark::State& state) {
  const auto inst = poisson_instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(offline_opt_tcp(inst).cost);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TcpOfflineOpt)->RangeMultiplier(2)->Range(250, 4000)->Complexity();

static void BM_SetCoverBranchAndBound(benchmark::State& state) {
  SeededRng rng(2, 0);
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto inst = pdla::tools::random_cover_instance(rng, m, m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(offline_opt_setcover_brute(inst).cost);
  }
}
BENCHMARK(BM_SetCoverBranchAndBound)->DenseRange(8, 20, 4);

static void BM_SetCoverPlainEnumeration(benchmark::State& state) {
  SeededRng rng(2, 0);
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto inst = pdla::tools::random_cover_instance(rng, m, m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_setcover(inst));
  }
}
BENCHMARK(BM_SetCoverPlainEnumeration)->DenseRange(8, 16, 4);

BENCHMARK_MAIN();
