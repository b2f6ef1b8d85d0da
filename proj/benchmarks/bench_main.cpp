#include <vector>

#include <benchmark/benchmark.h>

#include "dtdd/cluster.hpp"
#include "dtdd/isr.hpp"
#include "dtdd/oracle.hpp"
#include "dtdd/specfun.hpp"

namespace {

void BM_OmegaUncached(benchmark::State& state) {
    const double z = static_cast<double>(state.range(0)) / 100.0;
    for (auto _ : state) benchmark::DoNotOptimize(dtdd::omega_uncached(z));
}
BENCHMARK(BM_OmegaUncached)->Arg(110)->Arg(175)->Arg(1000);

void BM_IsrDlDl(benchmark::State& state) {
    dtdd::NetworkParams np;
    np.b = 1.2;
    const double x = static_cast<double>(state.range(0)) / 100.0;
    for (auto _ : state) benchmark::DoNotOptimize(dtdd::isr_dl_dl({x, 0.0}, np));
}
BENCHMARK(BM_IsrDlDl)->Arg(10)->Arg(30)->Arg(50);

void BM_IsrUlDl(benchmark::State& state) {
    dtdd::NetworkParams np;
    const double x = static_cast<double>(state.range(0)) / 100.0;
    for (auto _ : state) benchmark::DoNotOptimize(dtdd::isr_ul_dl({x, 0.0}, np));
}
BENCHMARK(BM_IsrUlDl)->Arg(10)->Arg(30)->Arg(50);

void BM_CoefA2Tilde(benchmark::State& state) {
    dtdd::ClusterParams cp;
    cp.rho0 = 0.2 * cp.delta_tilde;
    const dtdd::SmallCellQuery q{0.3, 1.75, 0.8};
    for (auto _ : state) benchmark::DoNotOptimize(dtdd::coef_a2_tilde(cp, q));
}
BENCHMARK(BM_CoefA2Tilde);

void BM_OracleEpstein(benchmark::State& state) {
    const std::vector<double> zs{1.2, 1.75};
    const double radius = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(dtdd::oracle_epstein(zs, radius, 1));
}
BENCHMARK(BM_OracleEpstein)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_OracleDlDl(benchmark::State& state) {
    dtdd::NetworkParams np;
    dtdd::OracleConfig oc;
    oc.workers = 1;
    for (auto _ : state) benchmark::DoNotOptimize(dtdd::oracle_dl_dl(0.3, 0.0, np, oc));
}
BENCHMARK(BM_OracleDlDl)->Unit(benchmark::kMillisecond);

void BM_OracleUlDl(benchmark::State& state) {
    dtdd::NetworkParams np;
    dtdd::OracleConfig oc;
    oc.workers = 1;
    for (auto _ : state) benchmark::DoNotOptimize(dtdd::oracle_ul_dl(0.3, 0.0, np, oc));
}
BENCHMARK(BM_OracleUlDl)->Unit(benchmark::kMillisecond);

void BM_OracleCoverage(benchmark::State& state) {
    const dtdd::ClusterParams cp;
    const dtdd::SmallCellQuery q;
    dtdd::OracleConfig oc;
    oc.workers = 1;
    oc.mc_draws = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(dtdd::oracle_coverage(0.01, cp, q, oc));
}
BENCHMARK(BM_OracleCoverage)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
