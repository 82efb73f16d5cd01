// Serial reference vs parallel kernel, per kernel.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "lensgem/canonical_code.hpp"
#include "lensgem/catalogue.hpp"
#include "lensgem/gm_complexity.hpp"
#include "lensgem/lens.hpp"
#include "lensgem/survey.hpp"

using namespace lensgem;

namespace {

const ColouredGraph& lens_graph(std::int64_t p) {
    static const auto g55 = ferri_crystallization(normalize_lens(55, 21)).graph;
    static const auto g89 = ferri_crystallization(normalize_lens(89, 34)).graph;
    static const auto g60 = ferri_crystallization(normalize_lens(60, 1)).graph;
    return p == 55 ? g55 : p == 89 ? g89 : g60;
}

void BM_gm_serial(benchmark::State& st) {
    const auto& g = lens_graph(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(gm_complexity_serial(g).value);
}

void BM_gm_parallel(benchmark::State& st) {
    const auto& g = lens_graph(st.range(0));
    const int jobs = static_cast<int>(st.range(1));
    for (auto _ : st) benchmark::DoNotOptimize(gm_complexity(g, jobs).value);
}

void BM_code_serial(benchmark::State& st) {
    const auto& g = lens_graph(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(canonical_code_serial(g));
}

void BM_code_parallel(benchmark::State& st) {
    const auto& g = lens_graph(st.range(0));
    const int jobs = static_cast<int>(st.range(1));
    for (auto _ : st) benchmark::DoNotOptimize(canonical_code(g, jobs));
}

void BM_census_serial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_crystallizations_serial(10).size());
}

void BM_census_parallel(benchmark::State& st) {
    const int jobs = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_crystallizations(10, jobs).size());
}

void BM_survey_serial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(survey_lens_range_serial(40).size());
}

void BM_survey_parallel(benchmark::State& st) {
    const int jobs = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(survey_lens_range(40, jobs).size());
}

}  // namespace

BENCHMARK(BM_gm_serial)->Arg(55)->Arg(89)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_gm_parallel)->ArgsProduct({{55, 89, 60}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_code_serial)->Arg(55)->Arg(89)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_code_parallel)->ArgsProduct({{55, 89}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_census_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_census_parallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_survey_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_survey_parallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
