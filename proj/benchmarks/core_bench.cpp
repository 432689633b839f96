// Microbenchmarks for the hot paths: finite-field rank, exhaustive resonance
// sweeps, symbolic pfaffians, and ideal evaluation.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "pdres/algebra.hpp"
#include "pdres/catalog.hpp"
#include "pdres/forms.hpp"
#include "pdres/matlin.hpp"
#include "pdres/resonance.hpp"
#include "pdres/scalars.hpp"

namespace {

pdres::ScalarMatrix random_matrix(std::uint32_t p, std::size_t n, std::uint32_t seed) {
    const pdres::Field gf = pdres::Field::prime(p);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> digit(0, static_cast<int>(p) - 1);
    pdres::ScalarMatrix M(gf, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            M.at(i, j) = pdres::Scalar::from_int(gf, digit(rng));
    return M;
}

void bm_gf_rank(benchmark::State& state) {
    const auto M = random_matrix(7, static_cast<std::size_t>(state.range(0)), 12345);
    for (auto _ : state) benchmark::DoNotOptimize(M.rank());
}
BENCHMARK(bm_gf_rank)->Arg(8)->Arg(16)->Arg(32);

void bm_resonance_sweep(benchmark::State& state) {
    const pdres::Field gf = pdres::Field::prime(static_cast<std::uint32_t>(state.range(0)));
    const pdres::GradedAlgebra A = pdres::pd3_from_trivector(
        pdres::catalog_entry("VII").form(gf));
    for (auto _ : state) {
        const auto P = pdres::resonance_points(A);
        benchmark::DoNotOptimize(P.loci.size());
    }
}
BENCHMARK(bm_resonance_sweep)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void bm_symbolic_pfaffian(benchmark::State& state) {
    const auto theta = pdres::catalog_entry("XI")
                           .form(pdres::Field::rationals())
                           .generic_contraction();
    for (auto _ : state) {
        const auto gens = theta.principal_pfaffian_ideal(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(gens.size());
    }
}
BENCHMARK(bm_symbolic_pfaffian)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void bm_ideal_locus(benchmark::State& state) {
    const pdres::Field gf = pdres::Field::prime(5);
    const pdres::GradedAlgebra A = pdres::pd3_from_trivector(
        pdres::catalog_entry("VII").form(gf));
    const auto gens = pdres::resonance_ideal(A, 1, 4);
    for (auto _ : state) {
        const auto V = pdres::locus_of_ideal(gens, gf, 7);
        benchmark::DoNotOptimize(V.point_count());
    }
}
BENCHMARK(bm_ideal_locus)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
