#include <memory>

#include <benchmark/benchmark.h>

#include "hallmilnor/free_lie.hpp"
#include "hallmilnor/hall.hpp"
#include "hallmilnor/hilton_milnor.hpp"
#include "hallmilnor/series.hpp"

namespace {

using namespace hallmilnor;

void BM_EnumerateBasis(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int max_len = static_cast<int>(state.range(1));
    for (auto _ : state) {
        HallBasisTable table = enumerate_hall_basis(n, max_len, OrderPolicy::CreationOrder);
        benchmark::DoNotOptimize(table.size());
    }
}
BENCHMARK(BM_EnumerateBasis)->Args({2, 10})->Args({3, 8});

void BM_SeriesMultiply(benchmark::State& state) {
    const int truncation = static_cast<int>(state.range(0));
    MultiSeries f(3, truncation);
    for (int i = 0; i < 3; ++i)
        f = series_add(f, MultiSeries::generator(3, truncation, i));
    const MultiSeries g = geom_sum(f);
    for (auto _ : state) {
        MultiSeries h = series_mul(g, g);
        benchmark::DoNotOptimize(h.coefficient({0, 0, 0, 0}));
    }
}
BENCHMARK(BM_SeriesMultiply)->Arg(6)->Arg(8);

void BM_GeomSum(benchmark::State& state) {
    const int truncation = static_cast<int>(state.range(0));
    MultiSeries f(3, truncation);
    for (int i = 0; i < 3; ++i)
        f = series_add(f, MultiSeries::generator(3, truncation, i));
    for (auto _ : state) {
        MultiSeries g = geom_sum(f);
        benchmark::DoNotOptimize(g.coefficient({0, 0, 0, 0}));
    }
}
BENCHMARK(BM_GeomSum)->Arg(6)->Arg(8);

void BM_VerifySeriesIdentity(benchmark::State& state) {
    const int truncation = static_cast<int>(state.range(0));
    std::vector<FormalObject> objects;
    for (int i = 0; i < 2; ++i)
        objects.push_back(FormalObject{std::string(1, static_cast<char>('x' + i)), 0,
                                       MultiSeries::generator(2, truncation, i)});
    for (auto _ : state) {
        bool ok = verify_hm_series(objects, truncation, OrderPolicy::CreationOrder, nullptr);
        benchmark::DoNotOptimize(ok);
    }
}
BENCHMARK(BM_VerifySeriesIdentity)->Arg(6)->Arg(8);

void BM_RewriteLongBracket(benchmark::State& state) {
    const int len = static_cast<int>(state.range(0));
    const Alphabet alphabet({"x", "y"});
    auto table = std::make_shared<const HallBasisTable>(
        enumerate_hall_basis(alphabet, len, OrderPolicy::CreationOrder));
    // Right-to-left comb [y,[x,[y,[x,...]]]]: not in the table, so every
    // rewrite exercises the exact solver for the top degree.
    HallWord w = HallWord::leaf(1);
    for (int i = 1; i < len; ++i)
        w = HallWord::bracket(HallWord::leaf(i % 2 + 1), w);
    for (auto _ : state) {
        HallRewriter rewriter(table);
        LieElement e = rewriter.rewrite(BracketExpr::from_word(w));
        benchmark::DoNotOptimize(e.terms().size());
    }
}
BENCHMARK(BM_RewriteLongBracket)->Arg(5)->Arg(6);

} // namespace

BENCHMARK_MAIN();
