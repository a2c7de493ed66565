// Microbenchmarks for the hot paths: series arithmetic, poset statistics,
// Schur evaluation, and one end-to-end verifier.

#include <benchmark/benchmark.h>

#include "qsel/jackson.hpp"
#include "qsel/schur.hpp"
#include "qsel/verify.hpp"
#include "qsel/youngbooks.hpp"

using namespace qsel;

namespace {

Laurent dense_poly(int terms) {
    Laurent a;
    for (int i = 0; i < terms; ++i)
        a = a + Laurent::mono(2 * i, mpq_class(i % 7 + 1, i % 3 + 1));
    return a;
}

void BM_laurent_mul(benchmark::State& state) {
    Laurent a = dense_poly(64), b = dense_poly(64);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_laurent_mul);

void BM_series_inv(benchmark::State& state) {
    Laurent den = Laurent::one();
    for (int i = 1; i <= 8; ++i)
        den = den * (Laurent::one() - Laurent::mono(2 * i));
    for (auto _ : state) benchmark::DoNotOptimize(series_inv(den, 160));
}
BENCHMARK(BM_series_inv);

void BM_maj_gf(benchmark::State& state) {
    StaircasePoset p(3, {1, 2}, {0, 1}); // 23 cells
    for (auto _ : state) benchmark::DoNotOptimize(maj_gf(p, 25));
}
BENCHMARK(BM_maj_gf);

void BM_count_extensions(benchmark::State& state) {
    StaircasePoset p(3, {1, 2}, {0, 1});
    for (auto _ : state) benchmark::DoNotOptimize(count_extensions(p, 25));
}
BENCHMARK(BM_count_extensions);

void BM_schur_at(benchmark::State& state) {
    Partition lam = {3, 2, 1};
    std::vector<int> pts = {0, 2, 4, 6, 8};
    for (auto _ : state) benchmark::DoNotOptimize(schur_at(lam, pts));
}
BENCHMARK(BM_schur_at);

void BM_partition_sum(benchmark::State& state) {
    Integrand f = integrand_qko(3, {1}, {1});
    for (auto _ : state)
        benchmark::DoNotOptimize(jackson_partition_sum(f, 3, 20));
}
BENCHMARK(BM_partition_sum);

void BM_verify_qko(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_qko(2, {1}, {1}, 20));
}
BENCHMARK(BM_verify_qko);

} // namespace

BENCHMARK_MAIN();
