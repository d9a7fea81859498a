// Serial reference against the OpenMP campaign on identical corpora.

#include <benchmark/benchmark.h>

#include "conncert/corpus.hpp"
#include "conncert/spectra.hpp"
#include "conncert/verify.hpp"

using namespace conncert;

namespace {

ExhaustiveSpec exhaustive_corpus(int max_order) {
  ExhaustiveSpec spec;
  spec.max_order = max_order;
  spec.filter.connected = true;
  return spec;
}

void BM_CampaignSerial(benchmark::State& state) {
  const auto spec = exhaustive_corpus(static_cast<int>(state.range(0)));
  std::uint64_t graphs = 0;
  for (auto _ : state) {
    const auto r = run_campaign_serial(spec, {});
    graphs = r.graphs;
    benchmark::DoNotOptimize(r.checks_run.size());
  }
  state.counters["graphs"] = static_cast<double>(graphs);
  state.SetItemsProcessed(static_cast<std::int64_t>(graphs) * state.iterations());
}

void BM_CampaignParallel(benchmark::State& state) {
  const auto spec = exhaustive_corpus(static_cast<int>(state.range(0)));
  CampaignOptions o;
  o.threads = static_cast<int>(state.range(1));
  std::uint64_t graphs = 0;
  for (auto _ : state) {
    const auto r = run_campaign(spec, o);
    graphs = r.graphs;
    benchmark::DoNotOptimize(r.checks_run.size());
  }
  state.counters["graphs"] = static_cast<double>(graphs);
  state.SetItemsProcessed(static_cast<std::int64_t>(graphs) * state.iterations());
}

void BM_RandomCampaignSerial(benchmark::State& state) {
  const RandomSpec spec{20, 0.4, 64, 1};
  for (auto _ : state) benchmark::DoNotOptimize(run_campaign_serial(spec, {}).graphs);
}

void BM_RandomCampaignParallel(benchmark::State& state) {
  const RandomSpec spec{20, 0.4, 64, 1};
  CampaignOptions o;
  o.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_campaign(spec, o).graphs);
}

void BM_Jacobi(benchmark::State& state) {
  const Graph g = random_gnp(static_cast<int>(state.range(0)), 0.3, 7);
  const auto m = laplacian(g);
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues_sym(m).values.data());
}

}  // namespace

BENCHMARK(BM_CampaignSerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CampaignParallel)->Args({5, 1})->Args({5, 2})->Args({5, 4})->Args({6, 1})->Args({6, 2})->Args({6, 4})
    ->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RandomCampaignSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RandomCampaignParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Jacobi)->Arg(10)->Arg(20)->Arg(40)->Arg(80);

BENCHMARK_MAIN();
