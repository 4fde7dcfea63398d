#include <benchmark/benchmark.h>

#include <random>

#include "pgiso/catalog.hpp"
#include "pgiso/fixtures.hpp"
#include "pgiso/isomorphism.hpp"
#include "pgiso/signature.hpp"

using namespace pgiso;

namespace {

void BM_signature_n6(benchmark::State& state) {
    const Spread d = fixture_spread("spreadn6t3a");
    for (auto _ : state) benchmark::DoNotOptimize(get_bitstrings(d.flats));
}
BENCHMARK(BM_signature_n6);

void BM_equivalence_n6(benchmark::State& state) {
    const Spread a = fixture_spread("spreadn6t3a");
    const Spread b = fixture_spread("spreadn6t3b");
    for (auto _ : state) benchmark::DoNotOptimize(check_spread_equivalence(a, b));
}
BENCHMARK(BM_equivalence_n6);

void BM_iso_find_first_n4(benchmark::State& state) {
    const Spread a = fixture_spread("spreadn4t2a");
    const Spread b = fixture_spread("spreadn4t2b");
    for (auto _ : state) benchmark::DoNotOptimize(check_spread_isomorphism(a, b));
}
BENCHMARK(BM_iso_find_first_n4);

void BM_iso_find_all_n4(benchmark::State& state) {
    const Spread a = fixture_spread("spreadn4t2a");
    const Spread b = fixture_spread("spreadn4t2b");
    SearchOptions opts;
    opts.find_all = true;
    for (auto _ : state) benchmark::DoNotOptimize(check_spread_isomorphism(a, b, opts));
}
BENCHMARK(BM_iso_find_all_n4);

void BM_iso_find_first_n6(benchmark::State& state) {
    const Spread a = fixture_spread("spreadn6t3a");
    const Spread b = fixture_spread("spreadn6t3b");
    for (auto _ : state) benchmark::DoNotOptimize(check_spread_isomorphism(a, b));
}
BENCHMARK(BM_iso_find_first_n6);

void BM_star_decompose(benchmark::State& state) {
    const Star s = fixture_star("starn5t3a");
    for (auto _ : state) benchmark::DoNotOptimize(star_to_spread(s));
}
BENCHMARK(BM_star_decompose);

void BM_star_iso_find_first(benchmark::State& state) {
    const Star a = fixture_star("starn5t3a");
    const Star b = fixture_star("starn5t3b");
    for (auto _ : state) benchmark::DoNotOptimize(check_star_isomorphism(a, b));
}
BENCHMARK(BM_star_iso_find_first);

// one catalog sampling step: draw a permutation and test the regrouped flats
void BM_catalog_step(benchmark::State& state) {
    const Spread seed = fixture_spread("spreadn4t2a");
    std::uint64_t k = 0;
    for (auto _ : state) {
        std::mt19937_64 rng(k++);
        const auto rho = random_point_permutation(seed.n, rng);
        benchmark::DoNotOptimize(try_make_spread(permute_design(seed, rho), seed.n, seed.t));
    }
}
BENCHMARK(BM_catalog_step);

void BM_cyclic_spread_n8t4(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(cyclic_spread(8, 4));
}
BENCHMARK(BM_cyclic_spread_n8t4);

}  // namespace

BENCHMARK_MAIN();
