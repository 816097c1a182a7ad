#include <benchmark/benchmark.h>

#include <random>

#include "toric/corpus.hpp"
#include "toric/klyachko.hpp"
#include "toric/normal_form.hpp"
#include "toric/smoothness.hpp"
#include "toric/verifier.hpp"

namespace {

using namespace toric;

std::vector<IntMatrix> random_matrices(std::size_t n, std::size_t count) {
  std::mt19937_64 rng(1);
  std::vector<IntMatrix> out;
  for (std::size_t k = 0; k < count; ++k) {
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = uniform_integer(rng, -20, 20);
    out.push_back(a);
  }
  return out;
}

std::vector<Cone> corpus(std::size_t rank, std::size_t count) {
  GeneratorConfig cfg;
  cfg.rank = rank;
  cfg.seed = 2;
  return ConeGenerator(cfg).take(count);
}

void BM_Hermite(benchmark::State& state) {
  const auto ms = random_matrices(static_cast<std::size_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(hermite_normal_form(ms[i++ % ms.size()]));
}
BENCHMARK(BM_Hermite)->Arg(3)->Arg(6);

void BM_Smith(benchmark::State& state) {
  const auto ms = random_matrices(static_cast<std::size_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(ms[i++ % ms.size()]));
}
BENCHMARK(BM_Smith)->Arg(3)->Arg(6);

void BM_DualCone(benchmark::State& state) {
  const auto cs = corpus(static_cast<std::size_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(dual_cone(cs[i++ % cs.size()]));
}
BENCHMARK(BM_DualCone)->Arg(2)->Arg(4);

void BM_NewCone(benchmark::State& state) {
  const auto cs = corpus(static_cast<std::size_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    const Cone& c = cs[i++ % cs.size()];
    benchmark::DoNotOptimize(new_cone(c.extreme_rays(), c.ambient_rank()));
  }
}
BENCHMARK(BM_NewCone)->Arg(2)->Arg(4);

void BM_DecideLocallyFree(benchmark::State& state) {
  const auto cs = corpus(static_cast<std::size_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(decide_tangent_locally_free(cs[i++ % cs.size()]));
}
BENCHMARK(BM_DecideLocallyFree)->Arg(2)->Arg(4);

void BM_IsSmooth(benchmark::State& state) {
  const auto cs = corpus(static_cast<std::size_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(is_smooth_cone(cs[i++ % cs.size()]));
}
BENCHMARK(BM_IsSmooth)->Arg(2)->Arg(4);

void BM_Sweep(benchmark::State& state) {
  const auto cs = corpus(static_cast<std::size_t>(state.range(0)), 200);
  for (auto _ : state) benchmark::DoNotOptimize(sweep(cs));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * cs.size()));
}
BENCHMARK(BM_Sweep)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
