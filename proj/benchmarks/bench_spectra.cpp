#include <benchmark/benchmark.h>

#include <cstdint>

#include "cayspec/cayley.hpp"
#include "cayspec/numtheory.hpp"
#include "cayspec/oracle.hpp"
#include "cayspec/spectrum.hpp"

using namespace cayspec;
namespace nt = cayspec::numtheory;

namespace {

void BM_UnitaryCyclicSpectrum(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(unitary_cyclic_spectrum(n));
    }
}
BENCHMARK(BM_UnitaryCyclicSpectrum)->Arg(720)->Arg(5040)->Arg(83160)->Arg(720720);

void BM_CirculantSpectrum(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    const auto exponents = nt::residue_class(1, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(circulant_spectrum(n, exponents));
    }
}
BENCHMARK(BM_CirculantSpectrum)->Arg(64)->Arg(256)->Arg(1024);

void BM_BuildAdjacency(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    const GroupSpec group = GroupSpec::cyclic(n);
    const ConnectionSet s = unitary_connection_set(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_adjacency(group, s));
    }
}
BENCHMARK(BM_BuildAdjacency)->Arg(64)->Arg(256)->Arg(1024);

void BM_JacobiEigensolve(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    const Matrix a = build_adjacency(GroupSpec::cyclic(n), unitary_connection_set(n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::symmetric_eigenvalues(a));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_JacobiEigensolve)->Arg(16)->Arg(32)->Arg(64)->Arg(128)->Complexity();

void BM_GroupSpectrum(benchmark::State& state) {
    const GroupSpec group = product(GroupSpec::cyclic(state.range(0)), GroupSpec::dihedral(5));
    const ConnectionSet s = parse_connection(group, "unitary ; explicit:r1,r4");
    for (auto _ : state) {
        benchmark::DoNotOptimize(group_spectrum(group, s));
    }
}
BENCHMARK(BM_GroupSpectrum)->Arg(6)->Arg(12)->Arg(24);

void BM_RamanujanHoelder(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    for (auto _ : state) {
        std::int64_t sum = 0;
        for (std::int64_t r = 0; r < 64; ++r) sum += nt::ramanujan_hoelder(r, n);
        benchmark::DoNotOptimize(sum);
    }
}
BENCHMARK(BM_RamanujanHoelder)->Arg(5040)->Arg(720720);

void BM_RamanujanDirect(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    for (auto _ : state) {
        double sum = 0.0;
        for (std::int64_t r = 0; r < 8; ++r) sum += nt::ramanujan_direct(r, n);
        benchmark::DoNotOptimize(sum);
    }
}
BENCHMARK(BM_RamanujanDirect)->Arg(360)->Arg(5040);

}  // namespace

BENCHMARK_MAIN();
