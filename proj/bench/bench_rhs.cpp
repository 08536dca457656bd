// bench_rhs.cpp — Hierarchy generator throughput: parallel kernel vs serial reference

#include <benchmark/benchmark.h>
#include <omp.h>

#include <random>

#include "heomq/heom.hpp"

using namespace heomq;

namespace {

struct Fixture {
    SystemModel sys;
    bath::BathExpansion bath;
    std::shared_ptr<const HierarchyIndexSet> idx;
    std::vector<Matrix4> in, out;

    Fixture(int M, int L)
        : sys(build_system(1.5, 1.0)),
          bath(bath::build_expansion({0.3, 0.5, 2.5}, M)),
          idx(std::make_shared<const HierarchyIndexSet>(M, L)),
          in(idx->size()),
          out(idx->size()) {
        std::mt19937_64 rng(1);
        std::normal_distribution<double> g;
        for (auto& m : in)
            for (int i = 0; i < 16; ++i)
                m.data()[i] = cplx(g(rng), g(rng));
    }
};

void set_counters(benchmark::State& state, const Fixture& f) {
    state.counters["ados"] = static_cast<double>(f.idx->size());
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.idx->size()));
}

void BM_kernel(benchmark::State& state) {
    Fixture f(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    heom::HeomOperator op(f.sys, f.bath, f.idx);
    const int saved = omp_get_max_threads();
    omp_set_num_threads(static_cast<int>(state.range(2)));
    for (auto _ : state) {
        op.apply(f.in, f.out);
        benchmark::DoNotOptimize(f.out.data());
    }
    omp_set_num_threads(saved);
    set_counters(state, f);
}

// general coupling operators force the dense-product path
void BM_kernel_dense(benchmark::State& state) {
    Fixture f(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    f.sys.V[0] = on_qubit(ops::sigma_x(), 1) + 1e-3 * on_qubit(ops::sigma_z(), 1);
    f.sys.V[1] = on_qubit(ops::sigma_x(), 2) + 1e-3 * on_qubit(ops::sigma_z(), 2);
    heom::HeomOperator op(f.sys, f.bath, f.idx);
    for (auto _ : state) {
        op.apply(f.in, f.out);
        benchmark::DoNotOptimize(f.out.data());
    }
    set_counters(state, f);
}

void BM_reference(benchmark::State& state) {
    Fixture f(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) {
        heom::apply_reference(f.sys, f.bath, *f.idx, f.in, f.out);
        benchmark::DoNotOptimize(f.out.data());
    }
    set_counters(state, f);
}

void BM_rk4_step(benchmark::State& state) {
    Fixture f(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    heom::HeomOperator op(f.sys, f.bath, f.idx);
    HierarchyState s(f.idx, Matrix4::Identity() / 4.0);
    for (auto _ : state) {
        heom::rk4_step(s, op, 1e-3);
        benchmark::DoNotOptimize(s.ados.data());
    }
    set_counters(state, f);
}

} // namespace

BENCHMARK(BM_kernel)->ArgNames({"M", "L", "threads"})->Args({2, 6, 1})->Args({2, 6, 2})->Args({2, 6, 4})->Args({2, 8, 1})->UseRealTime();
BENCHMARK(BM_kernel_dense)->ArgNames({"M", "L"})->Args({2, 6});
BENCHMARK(BM_reference)->ArgNames({"M", "L"})->Args({2, 6});
BENCHMARK(BM_rk4_step)->ArgNames({"M", "L"})->Args({2, 6});

BENCHMARK_MAIN();
