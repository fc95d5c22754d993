// Serial reference vs OpenMP kernels: the measurement-axis grid search and
// the parameter sweep.
#include "xyzmin/oracle.hpp"
#include "xyzmin/sweep.hpp"

#include <benchmark/benchmark.h>

using namespace xyzmin;

namespace {

const DensityMatrix& zero_field_state() {
    static const DensityMatrix rho = thermal_state(ModelParams{.J = 1, .Jz = -3, .gamma = 1});
    return rho;
}

template <OracleResult (*Search)(const DensityMatrix&, Objective, const OracleOptions&)>
void BM_Oracle(benchmark::State& state) {
    const auto kind = static_cast<Objective>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(Search(zero_field_state(), kind, {}));
}

template <std::vector<SweepRow> (*Sweep)(const SweepSpec&)>
void BM_Sweep(benchmark::State& state) {
    const SweepSpec spec = figure_presets(1).front().spec;
    for (auto _ : state) benchmark::DoNotOptimize(Sweep(spec));
}

}  // namespace

BENCHMARK(BM_Oracle<max_over_measurements_serial>)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Oracle<max_over_measurements>)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep<run_sweep_serial>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep<run_sweep>)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
