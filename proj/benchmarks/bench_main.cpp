#include <flagbundle/flagbundle.hpp>

#include <benchmark/benchmark.h>

using namespace flagbundle;

namespace {

void BM_RootSystem(benchmark::State& state, const char* type) {
    const LieType t = LieType::parse(type);
    for (auto _ : state) benchmark::DoNotOptimize(RootSystem(t).positive_roots().size());
}
BENCHMARK_CAPTURE(BM_RootSystem, E8, "E8");
BENCHMARK_CAPTURE(BM_RootSystem, A7, "A7");

void BM_FlagInvariants(benchmark::State& state) {
    const ParabolicDatum p = ParabolicDatum::parse("E7/{1,2,3,4,5,6}");
    for (auto _ : state) benchmark::DoNotOptimize(flag_invariants(p).fano_index);
}
BENCHMARK(BM_FlagInvariants);

Exponents ones(const ParabolicDatum& p) {
    Exponents e(p.rank(), 0.0);
    for (int i : p.complement()) e[i] = 1.0;
    return e;
}

void BM_KahlerForm(benchmark::State& state) {
    const ParabolicDatum p = full_flag(LieType{Family::A, static_cast<int>(state.range(0))});
    const BigCellChart chart(p);
    const Exponents e = ones(p);
    const PointZ z = sample_points(chart.dim(), 1, 3).front();
    for (auto _ : state) benchmark::DoNotOptimize(kahler_form_at(chart, e, z).matrix(0, 0));
}
BENCHMARK(BM_KahlerForm)->DenseRange(1, 4);

void BM_RicciForm(benchmark::State& state) {
    const ParabolicDatum p = full_flag(LieType{Family::A, static_cast<int>(state.range(0))});
    const BigCellChart chart(p);
    const Exponents e = ones(p);
    const PointZ z = sample_points(chart.dim(), 1, 3).front();
    for (auto _ : state) benchmark::DoNotOptimize(ricci_form_at(chart, e, z).matrix(0, 0));
}
BENCHMARK(BM_RicciForm)->DenseRange(1, 3);

void BM_Nijenhuis(benchmark::State& state) {
    const ParabolicDatum p1 = ParabolicDatum::parse("A1/{}");
    const ParabolicDatum p2 = ParabolicDatum::parse(state.range(0) == 1 ? "A1/{}" : "A2/{}");
    const ProductPair pair(ContactStructure::from_bundle(canonical_fraction_bundle(p1, 1)),
                           ContactStructure::from_bundle(canonical_fraction_bundle(p2, 1)));
    const RealVector x = sample_product_points(pair, 1, 5).front();
    for (auto _ : state) benchmark::DoNotOptimize(nijenhuis_residual_at(pair, 1.0, 2.0, x));
}
BENCHMARK(BM_Nijenhuis)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
