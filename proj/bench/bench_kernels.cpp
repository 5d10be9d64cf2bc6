// Serial reference kernels against the sparse and OpenMP versions.

#include "hopfcyc/cyclic.hpp"
#include "hopfcyc/rank.hpp"

#include <benchmark/benchmark.h>

using namespace hopfcyc;

namespace {

HopfPtr s3() { return group_algebra(*builtin_group("s3")); }

// Hochschild differential b_n of the adjoint module over kS3.
const SparseMatrix& differential(int n) {
    static std::vector<SparseMatrix> ds = [] {
        ChainComplexData c = hochschild_complex(build_cyclic(adjoint_module(s3()), 3));
        return c.diff;
    }();
    return ds.at(n);
}

void BM_rank_reference(benchmark::State& st) {
    const SparseMatrix& m = differential(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(rank_reference(m));
    st.counters["cols"] = static_cast<double>(m.cols());
}

void BM_rank_sparse(benchmark::State& st) {
    const SparseMatrix& m = differential(static_cast<int>(st.range(0)));
    bool par = st.range(1) != 0;
    for (auto _ : st) benchmark::DoNotOptimize(rank_sparse(m, Field{}, par));
    st.counters["cols"] = static_cast<double>(m.cols());
}

void BM_rank_sparse_mod_p(benchmark::State& st) {
    const SparseMatrix& m = differential(static_cast<int>(st.range(0)));
    bool par = st.range(1) != 0;
    for (auto _ : st) benchmark::DoNotOptimize(rank_sparse(m, Field{1000003}, par));
}

void BM_build_cyclic(benchmark::State& st) {
    CrossedModuleData m = adjoint_module(s3());
    int top = static_cast<int>(st.range(0));
    bool before = parallel_enabled();
    set_parallel(st.range(1) != 0);
    for (auto _ : st) benchmark::DoNotOptimize(build_cyclic(m, top));
    set_parallel(before);
}

void BM_assemble(benchmark::State& st) {
    HopfPtr h = s3();
    Index d = h->dim(), n = d * d * d * d;
    auto column = [&](Index c) {
        SparseVec v = h->product(static_cast<std::uint32_t>(c % d), static_cast<std::uint32_t>((c / d) % d));
        for (auto& e : v) e.index += (c / d) * d;
        return v;
    };
    bool par = st.range(0) != 0;
    for (auto _ : st) benchmark::DoNotOptimize(par ? assemble_parallel(n * d, n, column) : assemble_serial(n * d, n, column));
}

}  // namespace

BENCHMARK(BM_rank_reference)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rank_sparse)->Args({1, 0})->Args({2, 0})->Args({3, 0})->Args({2, 1})->Args({3, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rank_sparse_mod_p)->Args({3, 0})->Args({3, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_build_cyclic)->Args({3, 0})->Args({3, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_assemble)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
