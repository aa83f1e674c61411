#include <benchmark/benchmark.h>

#include <vector>

#include "symreg/classify.hpp"
#include "symreg/cyclo.hpp"
#include "symreg/groebner.hpp"
#include "symreg/triples.hpp"
#include "symreg/upoly.hpp"

static void BM_HilbertQuotient(benchmark::State& state) {
    for (auto _ : state) {
        auto r = symreg::upoly::hilbert_quotient({2, 5, 2, 12});
        benchmark::DoNotOptimize(r.integral);
    }
}
BENCHMARK(BM_HilbertQuotient);

static void BM_CycloReduceZero(benchmark::State& state) {
    auto reducer = symreg::cyclo::shared_reducer(15);
    // 1 + z^5 + z^10 = 0 for a primitive 15th root z
    std::vector<long long> coeffs(15, 0);
    for (int e = 0; e < 15; e += 5) coeffs[static_cast<std::size_t>(e)] = 1;
    for (auto _ : state) benchmark::DoNotOptimize(reducer->is_zero(coeffs));
}
BENCHMARK(BM_CycloReduceZero);

static void BM_EnumeratePoints(benchmark::State& state) {
    for (auto _ : state) {
        unsigned long long count = 0;
        symreg::triples::enumerate_vd(6, 10, [&](const symreg::cyclo::RootPoint&) {
            ++count;
            return true;
        });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumeratePoints);

static void BM_TripleOracle(benchmark::State& state) {
    for (auto _ : state) {
        auto r = symreg::triples::is_bad_oracle({8, 15, 2});
        benchmark::DoNotOptimize(r.bad);
    }
}
BENCHMARK(BM_TripleOracle);

static void BM_TripleCriteria(benchmark::State& state) {
    for (auto _ : state) {
        auto v = symreg::triples::classify_triple({16, 15, 8}, false);
        benchmark::DoNotOptimize(v.status);
    }
}
BENCHMARK(BM_TripleCriteria);

static void BM_ClassifyFour(benchmark::State& state) {
    symreg::classify::DegSeq ds{4, {1, 5, 6, 4}};
    for (auto _ : state) {
        auto v = symreg::classify::classify_symmetric(ds);
        benchmark::DoNotOptimize(v.status);
    }
}
BENCHMARK(BM_ClassifyFour);

static void BM_VerifyCertificate(benchmark::State& state) {
    symreg::classify::DegSeq ds{4, {1, 5, 6, 4}};
    auto cs = symreg::classify::construct_symmetric(ds);
    for (auto _ : state) {
        auto c = symreg::groebner::verify_regular_maximal(cs.generators, {1, 2, 3, 4});
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_VerifyCertificate);

static void BM_SplitCheck(benchmark::State& state) {
    auto cs = symreg::classify::construct_s22(5, 2, 4);
    for (auto _ : state) {
        auto c = symreg::classify::check_s22_split(cs.generators[0], cs.generators[1],
                                                   cs.generators[2], cs.generators[3]);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_SplitCheck);

BENCHMARK_MAIN();
