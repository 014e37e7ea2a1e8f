/*
 * Copyright 2026 The skewtop Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "skewtop/duality.hpp"
#include "skewtop/ensemble.hpp"
#include "skewtop/evolution.hpp"
#include "skewtop/monte_carlo.hpp"
#include "skewtop/series_engine.hpp"
#include "skewtop/skew_matrix.hpp"

namespace {

using namespace skewtop;

void BM_PartitionSeries(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int order = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(partition_series(k, order));
}
BENCHMARK(BM_PartitionSeries)->Args({2, 8})->Args({3, 8})->Args({4, 8})->Unit(benchmark::kMillisecond);

void BM_FreeEnergy(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(log_power_sums(partition_power_sums(4, order)));
}
BENCHMARK(BM_FreeEnergy)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_UniversalFreeEnergy(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(universal_free_energy(order));
}
BENCHMARK(BM_UniversalFreeEnergy)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_U1Series(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const SourceSpec a{{Rational(1), make_rational(5, 2)}};
  for (auto _ : state) benchmark::DoNotOptimize(u1_series(a, order));
}
BENCHMARK(BM_U1Series)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_PfaffianExact(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  SkewMatrix<Rational> m(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) m.set(i, j, random_small_rational(rng));
  }
  for (auto _ : state) benchmark::DoNotOptimize(pfaffian(m));
}
BENCHMARK(BM_PfaffianExact)->Arg(4)->Arg(10)->Arg(20);

void BM_MonteCarloTrace(benchmark::State& state) {
  const GaussianEnsemble ens(4, make_rational(1, 2));
  McConfig cfg;
  cfg.samples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto est = run_monte_carlo(cfg, 1, [&]() -> Sampler {
      auto sampler = std::make_shared<EnsembleSampler>(ens);
      auto x = std::make_shared<Eigen::MatrixXd>();
      return [sampler, x](std::mt19937_64& rng, std::vector<double>& out) {
        sampler->draw(rng, *x);
        out[0] = (*x * *x).trace();
      };
    });
    benchmark::DoNotOptimize(est);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarloTrace)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
