// Serial reference kernel against the OpenMP kernel on the bundled instances.

#include <benchmark/benchmark.h>

#include "crwp/config.hpp"
#include "crwp/crossval.hpp"
#include "crwp/pipeline.hpp"

using namespace crwp;

namespace {

const CRSemigroup& instance(int k) {
    static const CRSemigroup t2 = load_config(CRWP_DATA_DIR "/t2.cfg");
    static const CRSemigroup t3 = load_config(CRWP_DATA_DIR "/t3.cfg");
    return k == 2 ? t2 : t3;
}

void run(benchmark::State& state, Kernel kernel) {
    const CRSemigroup& s = instance(static_cast<int>(state.range(0)));
    const Pda wp = build_wp_recognizer(s);
    const auto oracle = semigroup_oracle(s);
    const auto max_len = static_cast<std::size_t>(state.range(1));
    std::size_t checked = 0;
    for (auto _ : state) {
        const CrossReport r = cross_validate(wp, s.alphabet(), oracle, max_len, kernel);
        checked = r.checked;
        benchmark::DoNotOptimize(r.disagreements);
    }
    state.counters["pairs"] = static_cast<double>(checked);
    state.counters["pairs/s"] = benchmark::Counter(static_cast<double>(checked), benchmark::Counter::kIsIterationInvariantRate);
}

void BM_Serial(benchmark::State& state) { run(state, Kernel::Serial); }
void BM_Parallel(benchmark::State& state) { run(state, Kernel::Parallel); }

void BM_BuildRecognizer(benchmark::State& state) {
    const CRSemigroup& s = instance(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(build_wp_recognizer(s).num_states());
}

}  // namespace

BENCHMARK(BM_Serial)->Args({3, 5})->Args({2, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->Args({3, 5})->Args({2, 6})->Args({3, 6})->Args({2, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildRecognizer)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
