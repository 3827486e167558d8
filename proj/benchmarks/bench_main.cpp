#include <benchmark/benchmark.h>

#include <random>

#include "stabmod/cohoring.hpp"
#include "stabmod/fitting.hpp"
#include "stabmod/sequences.hpp"

using namespace stabmod;
using exactla::Matrix;
using exactla::RingSpec;

namespace {

Matrix random_integer_matrix(RingSpec ring, long n, std::mt19937_64& rng, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    Matrix m(ring, n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) m.set(i, j, mpq_class(dist(rng)));
    return m;
}

}  // namespace

static void BM_SnfPLocal(benchmark::State& state) {
    std::mt19937_64 rng(7);
    RingSpec zl = RingSpec::p_local(3);
    Matrix a = random_integer_matrix(zl, state.range(0), rng, 27);
    for (auto _ : state) {
        auto r = exactla::snf(a);
        benchmark::DoNotOptimize(r.valuations.data());
    }
}
BENCHMARK(BM_SnfPLocal)->Arg(8)->Arg(16)->Arg(32);

static void BM_HowellTruncation(benchmark::State& state) {
    std::mt19937_64 rng(11);
    RingSpec zt = RingSpec::truncation(3, 8);
    Matrix a = random_integer_matrix(zt, state.range(0), rng, 6560);
    for (auto _ : state) {
        auto h = exactla::howell(a);
        benchmark::DoNotOptimize(h.span.rows());
    }
}
BENCHMARK(BM_HowellTruncation)->Arg(8)->Arg(16)->Arg(32);

static void BM_TowerConstruction(benchmark::State& state) {
    // group tables are memoized; this measures steady-state tower assembly
    // (the first iteration pays the full validation)
    for (auto _ : state) {
        grp::Tower t = grp::tower(state.range(0));
        benchmark::DoNotOptimize(t.levels.back().group->order());
    }
}
BENCHMARK(BM_TowerConstruction)->Arg(2)->Arg(3);

static void BM_InducedModuleAudit(benchmark::State& state) {
    grp::NLevelData n = grp::n_level(static_cast<int>(state.range(0)));
    rep::RepModule triv = rep::trivial_module(grp::g24().group, RingSpec::p_local(3));
    for (auto _ : state) {
        rep::RepModule ind = rep::induce(triv, n.g24_in);
        benchmark::DoNotOptimize(ind.rank());
    }
}
BENCHMARK(BM_InducedModuleAudit)->Arg(2)->Arg(3);

static void BM_SequenceExactness(benchmark::State& state) {
    homalg::ChainComplex c = homalg::g24_dihedral_sequence();
    for (auto _ : state) {
        auto cert = homalg::check_exact(c);
        benchmark::DoNotOptimize(cert.exact);
    }
}
BENCHMARK(BM_SequenceExactness);

static void BM_LedgerConstruction(benchmark::State& state) {
    for (auto _ : state) {
        cohoring::CohomologyLedger ledger(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(ledger.rows().size());
    }
}
BENCHMARK(BM_LedgerConstruction)->Arg(4)->Arg(6);

static void BM_KrullSchmidt(benchmark::State& state) {
    homalg::SplitContext ctx = homalg::g24_context();
    std::mt19937_64 rng(99);
    rep::RepModule m =
        homalg::random_g24_module(RingSpec::truncation(3, 8), state.range(0), rng);
    for (auto _ : state) {
        auto rep = homalg::ks_decompose(m, ctx, 4242, 0);
        benchmark::DoNotOptimize(rep.summands.size());
    }
}
BENCHMARK(BM_KrullSchmidt)->Arg(6)->Arg(10);

BENCHMARK_MAIN();
