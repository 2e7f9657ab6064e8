#include <benchmark/benchmark.h>

#include <random>

#include "toruscount/analysis.hpp"
#include "toruscount/lattice.hpp"
#include "toruscount/vanishing.hpp"

using namespace toruscount;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t n, int span) {
    std::uniform_int_distribution<int> dist(-span, span);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = dist(rng);
    return m;
}

void BM_smith_normal_form(benchmark::State& state) {
    std::mt19937 rng(7);
    std::vector<IntMatrix> inputs;
    for (int i = 0; i < 32; ++i)
        inputs.push_back(random_matrix(rng, static_cast<std::size_t>(state.range(0)), 20));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(smith_normal_form(inputs[i++ % inputs.size()]));
    }
}
BENCHMARK(BM_smith_normal_form)->Arg(3)->Arg(5)->Arg(8);

void BM_unit_equation(benchmark::State& state) {
    UnitEquation eq;
    for (long i = 0; i < state.range(0); ++i)
        eq.coefficients.push_back(i % 2 == 0 ? Rational(1) : Rational(-1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_unit_equation(eq));
    }
}
BENCHMARK(BM_unit_equation)->Arg(2)->Arg(3)->Arg(4);

void BM_fermat_counting(benchmark::State& state) {
    auto f = LaurentPolynomial::parse("t1^3 + t2^3 - 1", 2);
    Decomposition dec = decompose({f});
    TorsionCounter counter(dec);
    for (auto _ : state) {
        Integer total = 0;
        for (long n = 1; n <= 60; ++n) total += counter.count_dividing(n);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_fermat_counting);

void BM_decompose_pair(benchmark::State& state) {
    auto polys = std::vector<LaurentPolynomial>{
        LaurentPolynomial::parse("t1*t3 + t4 + 1", 4),
        LaurentPolynomial::parse("t1 + t2 + t3", 4)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose(polys));
    }
}
BENCHMARK(BM_decompose_pair);

}  // namespace

BENCHMARK_MAIN();
