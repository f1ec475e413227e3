#include <benchmark/benchmark.h>

#include "wht/analysis.hpp"
#include "wht/corpus_dsl.hpp"
#include "wht/golden_corpus.hpp"
#include "wht/reporting.hpp"

namespace {

// The golden corpus repeated with fresh ids and names, for scaling runs.
wht::Corpus replicated(std::int64_t copies) {
  wht::Corpus out;
  const auto& golden = wht::load_golden().applications;
  for (std::int64_t k = 0; k < copies; ++k) {
    for (auto app : golden) {
      app.id += k * 100;
      app.name += " #" + std::to_string(k);
      out.applications.push_back(std::move(app));
    }
  }
  return out;
}

void BM_ParseGolden(benchmark::State& state) {
  const std::string_view source = wht::golden_source();
  for (auto _ : state) benchmark::DoNotOptimize(wht::parse_corpus(source));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * source.size()));
}
BENCHMARK(BM_ParseGolden);

void BM_SerializeGolden(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(wht::serialize_corpus(wht::load_golden()));
}
BENCHMARK(BM_SerializeGolden);

void BM_JsonRoundTrip(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(wht::import_json(wht::export_json(wht::load_golden())));
}
BENCHMARK(BM_JsonRoundTrip);

void BM_ClassifyCorpus(benchmark::State& state) {
  const wht::Corpus c = replicated(state.range(0));
  for (auto _ : state) {
    for (const auto& app : c.applications) benchmark::DoNotOptimize(wht::classify(wht::compute_hallmark(app)));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * c.applications.size()));
}
BENCHMARK(BM_ClassifyCorpus)->Arg(1)->Arg(30);

void BM_TermCoverage(benchmark::State& state) {
  const wht::Corpus c = replicated(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wht::term_coverage(c));
}
BENCHMARK(BM_TermCoverage)->Arg(1)->Arg(30);

void BM_Clusters(benchmark::State& state) {
  const wht::Corpus c = replicated(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wht::cluster_by_hallmark(c));
    benchmark::DoNotOptimize(wht::cluster_by_binary_hallmark(c));
  }
}
BENCHMARK(BM_Clusters)->Arg(1)->Arg(30);

void BM_HammingMatrix(benchmark::State& state) {
  const wht::Corpus c = replicated(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wht::distance_matrix(c, wht::Metric::HammingBinary));
}
BENCHMARK(BM_HammingMatrix)->Arg(1)->Arg(10)->Arg(30);

void BM_RenderDot(benchmark::State& state) {
  const wht::CrossTab t = wht::cross_tab(wht::load_golden(), wht::CrossKey::Genre);
  for (auto _ : state) benchmark::DoNotOptimize(wht::render_dot(t));
}
BENCHMARK(BM_RenderDot);

}  // namespace

BENCHMARK_MAIN();
