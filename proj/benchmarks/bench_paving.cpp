#include "rospave/rospave.hpp"

#include <benchmark/benchmark.h>

#include <cstddef>
#include <random>
#include <vector>

namespace {

using namespace rospave;

NonnegativeMatrix dense_matrix(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<unsigned long> num(0, 255);
    std::vector<NonnegativeMatrix::Entry> entries;
    entries.reserve(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) {
            const unsigned long v = num(rng);
            if (v != 0) {
                Rational r(v, 256);
                r.canonicalize();
                entries.push_back({k, j, std::move(r)});
            }
        }
    }
    return NonnegativeMatrix::from_triplets(n, std::move(entries));
}

FixedPointFreeMap random_map(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<std::size_t> pick(0, n - 2);
    std::vector<std::size_t> f(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t v = pick(rng);
        f[i] = v >= i ? v + 1 : v;
    }
    return FixedPointFreeMap(std::move(f));
}

void BM_Pave(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    const NonnegativeMatrix m = dense_matrix(rng, n);
    const Rational eps(1, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pave(m, eps));
    }
}
BENCHMARK(BM_Pave)->Arg(50)->Arg(100)->Arg(200);

void BM_CheckFragmentation(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const auto n = static_cast<std::size_t>(state.range(0));
    const NonnegativeMatrix m = dense_matrix(rng, n);
    const IndexSet full = IndexSet::full(n);
    const Rational eps = norm_inf(m);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_fragmentation(m, full, eps));
    }
}
BENCHMARK(BM_CheckFragmentation)->Arg(100)->Arg(400);

void BM_RestrictedNorm(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const auto n = static_cast<std::size_t>(state.range(0));
    const NonnegativeMatrix m = dense_matrix(rng, n);
    const IndexSet full = IndexSet::full(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(restricted_norm(m, full));
    }
}
BENCHMARK(BM_RestrictedNorm)->Arg(100)->Arg(400);

void BM_PaveFree(benchmark::State& state) {
    std::mt19937_64 rng(4);
    const auto n = static_cast<std::size_t>(state.range(0));
    const FixedPointFreeMap f = random_map(rng, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pave_free(f));
    }
}
BENCHMARK(BM_PaveFree)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_MinPavingNumber(benchmark::State& state) {
    std::mt19937_64 rng(5);
    const auto n = static_cast<std::size_t>(state.range(0));
    const NonnegativeMatrix m = dense_matrix(rng, n);
    const Rational half = norm_inf(m) / 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_paving_number(m, half));
    }
}
BENCHMARK(BM_MinPavingNumber)->Arg(6)->Arg(8);

} // namespace

BENCHMARK_MAIN();
