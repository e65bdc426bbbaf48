#include <benchmark/benchmark.h>

#include "qxpress/corpus.hpp"
#include "qxpress/metrics.hpp"

using namespace qxpress;

namespace {

const ProfileRegistry& registry() {
    static const ProfileRegistry reg = builtin_profiles();
    return reg;
}

const CorpusManifest& manifest() {
    static const CorpusManifest m = bundled_corpus(registry());
    return m;
}

void BM_TokenizeUnit(benchmark::State& state) {
    const auto& entry = manifest().units.at(static_cast<std::size_t>(state.range(0)));
    const auto unit = load_unit(manifest(), entry);
    const auto& profile = registry().lookup(unit.language_id);
    const auto source = strip_non_essential(unit, profile);
    for (auto _ : state) benchmark::DoNotOptimize(tokenize(source, profile));
    state.SetLabel(entry.unit_name);
}
BENCHMARK(BM_TokenizeUnit)->DenseRange(0, 23, 5);

void BM_AnalyzeUnit(benchmark::State& state) {
    const auto& entry = manifest().units.at(static_cast<std::size_t>(state.range(0)));
    const auto unit = load_unit(manifest(), entry);
    const auto& profile = registry().lookup(unit.language_id);
    for (auto _ : state) benchmark::DoNotOptimize(analyze_unit(unit, profile));
    state.SetLabel(entry.unit_name);
}
BENCHMARK(BM_AnalyzeUnit)->DenseRange(0, 23, 5);

void BM_AnalyzeCorpus(benchmark::State& state) {
    const auto jobs = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(analyze_corpus(manifest(), registry(), jobs));
}
BENCHMARK(BM_AnalyzeCorpus)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
