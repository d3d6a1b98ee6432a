#include "cyclic/catalog.hpp"
#include "cyclic/forms.hpp"
#include "cyclic/matrix.hpp"
#include "cyclic/representation.hpp"

#include <benchmark/benchmark.h>

#include <cstdint>

using namespace cyclic;

namespace {

// small deterministic generator; mirrors the test support one
std::uint64_t splitmix(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Matrix random_matrix(std::size_t n, std::uint64_t seed) {
    std::uint64_t state = seed;
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = Rational(static_cast<long>(splitmix(state) % 19) - 9,
                               static_cast<long>(splitmix(state) % 7) + 1);
    return m;
}

void bench_rref(benchmark::State& state) {
    const Matrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 42);
    for (auto _ : state) {
        auto r = rref(m);
        benchmark::DoNotOptimize(r.rank);
    }
    state.SetComplexityN(state.range(0));
}

void bench_signature(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    Matrix m = random_matrix(n, 7);
    m = m + m.transpose();
    for (auto _ : state) {
        auto s = signature(m);
        benchmark::DoNotOptimize(s.positive);
    }
    state.SetComplexityN(state.range(0));
}

void bench_validate(benchmark::State& state) {
    const LieAlgebra g = make_by_id("sl3_semidirect_F3").algebra;
    for (auto _ : state) {
        auto r = g.validate();
        benchmark::DoNotOptimize(r.ok);
    }
}

void bench_cyclic_space(benchmark::State& state) {
    const char* ids[] = {"sl2", "so3_semidirect_F3", "sl3", "sl3_semidirect_F3"};
    const LieAlgebra g = make_by_id(ids[state.range(0)]).algebra;
    for (auto _ : state) {
        auto space = cyclic_space(g);
        benchmark::DoNotOptimize(space.basis.size());
    }
    state.SetLabel(ids[state.range(0)]);
}

void bench_invariant_space(benchmark::State& state) {
    const LieAlgebra g = make_by_id("so3_semidirect_F3").algebra;
    for (auto _ : state) {
        auto space = invariant_space(g);
        benchmark::DoNotOptimize(space.basis.size());
    }
}

void bench_quadruple_space(benchmark::State& state) {
    const Representation r = tensor_rep(vk_module(2), vk_module(2));
    for (auto _ : state) {
        auto space = quadruple_space(r);
        benchmark::DoNotOptimize(space.basis.size());
    }
}

void bench_killing(benchmark::State& state) {
    const LieAlgebra g = make_by_id("sl3").algebra;
    for (auto _ : state) {
        auto k = killing_form(g);
        benchmark::DoNotOptimize(k.dim());
    }
}

} // namespace

BENCHMARK(bench_rref)->RangeMultiplier(2)->Range(4, 32)->Complexity();
BENCHMARK(bench_signature)->RangeMultiplier(2)->Range(4, 32)->Complexity();
BENCHMARK(bench_validate);
BENCHMARK(bench_cyclic_space)->DenseRange(0, 3);
BENCHMARK(bench_invariant_space);
BENCHMARK(bench_quadruple_space);
BENCHMARK(bench_killing);

BENCHMARK_MAIN();
