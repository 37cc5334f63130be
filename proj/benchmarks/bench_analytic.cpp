#include <benchmark/benchmark.h>

#include "ramanpump/analytic.hpp"
#include "ramanpump/spectrum.hpp"

namespace {

using namespace ramanpump;

MoleculeParams organic() { return {3.0, 0.1, 0.01, 1.0e-3, 0.01, 0.2}; }
DriveParams organic_drive() { return {2.0, 0.01, 0.05, 0.01}; }

void BM_CoherencePipeline(benchmark::State& state) {
    const MoleculeParams mol = organic();
    const DriveParams drive = organic_drive();
    const Environment env(0.02);
    for (auto _ : state) {
        const double n_coh = coherent_quanta(mol, drive);
        const double n_incoh = thermal_occupation(mol.omega_v, env.kT);
        benchmark::DoNotOptimize(n_coh / n_incoh);
    }
}
BENCHMARK(BM_CoherencePipeline);

void BM_ForceComponents(benchmark::State& state) {
    const MoleculeParams mol = organic();
    const DriveParams drive = organic_drive();
    for (auto _ : state)
        benchmark::DoNotOptimize(effective_force_components(mol, drive));
}
BENCHMARK(BM_ForceComponents);

void BM_SpectrumSample(benchmark::State& state) {
    const SpectrumModel model =
        incoherent_spectrum(organic(), organic_drive(), Environment(0.02));
    const FrequencyGrid grid = FrequencyGrid::probe_centered(2.0, 0.1);
    for (auto _ : state) benchmark::DoNotOptimize(sample(model, grid));
    state.SetItemsProcessed(state.iterations() * grid.size());
}
BENCHMARK(BM_SpectrumSample);

void BM_Chi3(benchmark::State& state) {
    const MoleculeParams mol = organic();
    const DriveParams drive = organic_drive();
    for (auto _ : state) benchmark::DoNotOptimize(chi3(mol, drive, 1e19));
}
BENCHMARK(BM_Chi3);

}  // namespace
