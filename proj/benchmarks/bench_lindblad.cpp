#include <benchmark/benchmark.h>

#include <Eigen/Dense>

#include "ramanpump/integrator.hpp"
#include "ramanpump/lindblad.hpp"
#include "ramanpump/operators.hpp"
#include "support/dense_liouvillian.hpp"

namespace {

using namespace ramanpump;

MoleculeParams bench_mol() { return {10.0, 1.0, 0.05, 0.02, 0.2, 0.2}; }
DriveParams bench_drive() { return {6.0, 0.3, 0.5, 0.6}; }

void BM_StructuredRhs(benchmark::State& state) {
    const int cutoff = int(state.range(0));
    LindbladRhs rhs(bench_mol(), bench_drive(), 0.1, cutoff);
    Eigen::MatrixXcd rho = ops::ground_thermal_state(0.1, cutoff);
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(rhs(t, rho));
        t += 1e-3;
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_StructuredRhs)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_DenseRhsBaseline(benchmark::State& state) {
    const int cutoff = int(state.range(0));
    testsupport::DenseLiouvillian rhs(bench_mol(), bench_drive(), 0.1, cutoff);
    Eigen::MatrixXcd rho = ops::ground_thermal_state(0.1, cutoff);
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(rhs(t, rho));
        t += 1e-3;
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_DenseRhsBaseline)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_IntegratorAdvance(benchmark::State& state) {
    const int cutoff = int(state.range(0));
    LindbladRhs rhs(bench_mol(), bench_drive(), 0.0, cutoff);
    StepControl ctrl;
    ctrl.rtol = 1e-8;
    ctrl.atol = 1e-10;
    for (auto _ : state) {
        Dopri5<LindbladRhs> integ(rhs, ctrl);
        integ.start(0.0, ops::ground_thermal_state(0.0, cutoff));
        integ.advance_to(20.0);
        benchmark::DoNotOptimize(integ.state());
        state.counters["steps"] = double(integ.steps_taken());
    }
}
BENCHMARK(BM_IntegratorAdvance)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
