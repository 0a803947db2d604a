// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <vector>

#include "bures/hyperbolic.hpp"
#include "bures/measures.hpp"
#include "bures/random.hpp"
#include "bures/verify.hpp"

namespace {

using namespace bures;

std::vector<std::pair<BlochVector, BlochVector>> pairs(Regime r) {
  std::vector<std::pair<BlochVector, BlochVector>> out;
  for (std::uint64_t i = 0; i < 1024; ++i) out.push_back(trial_pair(1, i, r, r));
  return out;
}

template <typename F>
void run_over_pairs(benchmark::State& state, F&& f) {
  const auto ps = pairs(Regime::uniform_ball);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [u, v] = ps[i++ & 1023];
    benchmark::DoNotOptimize(f(u, v));
  }
}

void BM_FidelityMatrix(benchmark::State& state) {
  run_over_pairs(state, [](const BlochVector& u, const BlochVector& v) {
    return bures_fidelity_matrix(density_from_bloch(u), density_from_bloch(v));
  });
}
BENCHMARK(BM_FidelityMatrix);

void BM_FidelityClosed(benchmark::State& state) {
  run_over_pairs(state, [](const BlochVector& u, const BlochVector& v) {
    return bures_fidelity_closed(u, v);
  });
}
BENCHMARK(BM_FidelityClosed);

void BM_FidelityHyperbolic(benchmark::State& state) {
  run_over_pairs(state, [](const BlochVector& u, const BlochVector& v) {
    return fidelity_hyperbolic(u, v);
  });
}
BENCHMARK(BM_FidelityHyperbolic);

void BM_LambdaRoots(benchmark::State& state) {
  run_over_pairs(state, [](const BlochVector& u, const BlochVector& v) {
    return lambda_roots(u, v).plus;
  });
}
BENCHMARK(BM_LambdaRoots);

void BM_Triangle(benchmark::State& state) {
  run_over_pairs(state, [](const BlochVector& u, const BlochVector& v) {
    return triangle(u, v).median_AD;
  });
}
BENCHMARK(BM_Triangle);

void BM_Compare(benchmark::State& state) {
  run_over_pairs(state, [](const BlochVector& u, const BlochVector& v) {
    return compare(u, v).max_pairwise_diff;
  });
}
BENCHMARK(BM_Compare);

void BM_Sweep(benchmark::State& state) {
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep(42, 100000, Regime::uniform_ball, Regime::uniform_ball, workers));
  }
  state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->Arg(0)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
