// Copyright 2026 The scriptometer Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "scriptometer/corpus.hpp"
#include "scriptometer/hierclust.hpp"
#include "scriptometer/matrix.hpp"
#include "scriptometer/metrics.hpp"
#include "scriptometer/stability.hpp"
#include "scriptometer/synthetic.hpp"

using namespace scriptometer;

namespace {

std::vector<Witness> witnesses(std::size_t n) {
  SyntheticCorpusSpec spec;
  spec.n_witnesses = n;
  SyntheticCorpus c = generate_dialect_corpus(spec);
  std::vector<Witness> ws;
  for (std::size_t i = 0; i < c.metas.size(); ++i)
    ws.push_back(Witness{c.metas[i], normalized_tokens(c.texts[i], NormalizationConfig{})});
  return ws;
}

RelFreqMatrix relfreq(std::size_t n, std::size_t mfw) {
  return relative_freq(select_mfw(build_dtm(witnesses(n)), mfw));
}

void BM_BuildDtm(benchmark::State& state) {
  auto ws = witnesses(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_dtm(ws));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildDtm)->RangeMultiplier(2)->Range(12, 96)->Complexity();

void BM_DistanceMatrix(benchmark::State& state) {
  RelFreqMatrix m = relfreq(static_cast<std::size_t>(state.range(0)), 200);
  for (auto _ : state) benchmark::DoNotOptimize(distance_matrix(m, Metric::manhattan));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DistanceMatrix)->RangeMultiplier(2)->Range(12, 96)->Complexity(benchmark::oNSquared);

void BM_WardCluster(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d[i * n + j] = d[j * n + i] = u(rng);
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("W" + std::to_string(i));
  for (auto _ : state) benchmark::DoNotOptimize(ward_cluster(ids, d));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_WardCluster)->RangeMultiplier(2)->Range(16, 512)->Complexity(benchmark::oNCubed);

void BM_MfwSweep(benchmark::State& state) {
  DocTermMatrix dtm = build_dtm(witnesses(48));
  for (auto _ : state) benchmark::DoNotOptimize(mfw_sweep(dtm, {50, 100, 200, 300}, 2));
}
BENCHMARK(BM_MfwSweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
