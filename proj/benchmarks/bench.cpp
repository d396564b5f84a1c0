#include "tameblocks/building.hpp"
#include "tameblocks/standard_groups.hpp"

#include <benchmark/benchmark.h>

using namespace tameblocks;

static void BM_GenerateWeylGL4(benchmark::State& state) {
    RootDatum rd = gl_datum(4);
    for (auto _ : state) {
        WeylGroup w = generate_weyl(rd);
        benchmark::DoNotOptimize(w.elements.data());
    }
}
BENCHMARK(BM_GenerateWeylGL4);

static void BM_EnumerateParamsSp4(benchmark::State& state) {
    RootDatum rd = sp4_datum();
    FrobeniusDescriptor f = split_frobenius(rd, 3, 3);
    WeylGroup w0 = generate_weyl(rd);
    for (auto _ : state) {
        auto params = enumerate_inertial_params(rd, f, w0, state.range(0), Lambda::Qlbar);
        benchmark::DoNotOptimize(params.data());
    }
}
BENCHMARK(BM_EnumerateParamsSp4)->Arg(4)->Arg(8);

static void BM_PartitionSL2(benchmark::State& state) {
    RootDatum rd = sl2_datum();
    FrobeniusDescriptor f = split_frobenius(rd, 3, 3);
    BuildingContext ctx = make_building_context(rd, f);
    for (auto _ : state) {
        auto report = verify_partition(ctx, 8, Lambda::Qlbar);
        benchmark::DoNotOptimize(report.pass);
    }
}
BENCHMARK(BM_PartitionSL2);

BENCHMARK_MAIN();
