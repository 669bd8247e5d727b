#include "g2k/fueter_model.hpp"
#include "g2k/serialization.hpp"

#include <benchmark/benchmark.h>

#include <fstream>

using namespace g2k;

namespace {

Fixture load(const std::string& tag) {
    std::ifstream in(std::string(G2K_DATA_DIR) + "/fixtures/" + tag + ".json");
    return fixture_from_json(json::parse(in));
}

QMat diag3(int a, int b, int c) {
    QMat m(3, 3);
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    return m;
}

void BM_CountAssociatives(benchmark::State& st) {
    Fixture f = load(st.range(0) == 0 ? "ex44" : "ex45");
    for (auto _ : st) benchmark::DoNotOptimize(count_associatives(f.orbifold, f.resolution).total);
}
BENCHMARK(BM_CountAssociatives)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_WeylGroup(benchmark::State& st) {
    RootSystemData rs = root_system(st.range(0) == 0 ? "A4" : "D4");
    for (auto _ : st) benchmark::DoNotOptimize(weyl_group(rs).order());
}
BENCHMARK(BM_WeylGroup)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FixedLocusD4(benchmark::State& st) {
    RootSystemData rs = root_system("D4");
    std::vector<QMat> rot{diag3(1, -1, -1), diag3(-1, 1, -1)};
    for (auto _ : st) benchmark::DoNotOptimize(fixed_locus(rot, rs).components.size());
}
BENCHMARK(BM_FixedLocusD4)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_GhDecay(benchmark::State& st) {
    auto g = GHConfig::make({ImVec{1, 0, 0}, ImVec{0, 2, 0}, ImVec{-1, 0, 0}, ImVec{0, -2, 0}});
    auto radii = default_decay_ladder(g);
    for (auto _ : st) benchmark::DoNotOptimize(gh_decay_exponent(g, radii).slope);
}
BENCHMARK(BM_GhDecay)->Unit(benchmark::kMicrosecond);

void BM_EstimateConstant(benchmark::State& st) {
    auto op = SpectralOperator::make(two_block_model(2, 4, 2), static_cast<double>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(estimate_constant(op, NormChoice::Holder, 20, 7).empirical);
}
BENCHMARK(BM_EstimateConstant)->Arg(1)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace
