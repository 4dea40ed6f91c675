// Serial reference vs OpenMP kernels on the path-star instance.

#include <benchmark/benchmark.h>

#include "sigpr/generators.hpp"
#include "sigpr/local_ppr.hpp"
#include "sigpr/significant.hpp"

namespace {

const sigpr::PathStar& instance() {
  static const sigpr::PathStar ps = sigpr::gen_path_star(2000, 50);
  return ps;
}

void BM_ApproxRowSerial(benchmark::State& state) {
  const auto& ps = instance();
  const sigpr::RowParams p{0.01, 0.5, 0.15};
  std::uint64_t seed = 0;
  for (auto _ : state) {
    sigpr::QueryLedger ledger;
    benchmark::DoNotOptimize(sigpr::approx_row_serial(ps.graph, ps.spec.hub_id, p, seed++, ledger));
    state.counters["steps"] = static_cast<double>(ledger.walk_steps);
  }
}
BENCHMARK(BM_ApproxRowSerial)->Unit(benchmark::kMillisecond);

void BM_ApproxRowParallel(benchmark::State& state) {
  const auto& ps = instance();
  const sigpr::RowParams p{0.01, 0.5, 0.15};
  std::uint64_t seed = 0;
  for (auto _ : state) {
    sigpr::QueryLedger ledger;
    benchmark::DoNotOptimize(sigpr::approx_row(ps.graph, ps.spec.hub_id, p, seed++, ledger,
                                               sigpr::ExecPolicy{static_cast<int>(state.range(0))}));
  }
}
BENCHMARK(BM_ApproxRowParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SignificantSerial(benchmark::State& state) {
  const auto& ps = instance();
  const auto cfg = sigpr::SignificantConfig{}.scaled(0.1);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    sigpr::QueryLedger ledger;
    benchmark::DoNotOptimize(sigpr::significant_pageranks_serial(ps.graph, 50, 0.15, seed++, cfg, ledger));
  }
}
BENCHMARK(BM_SignificantSerial)->Unit(benchmark::kMillisecond);

void BM_SignificantParallel(benchmark::State& state) {
  const auto& ps = instance();
  const auto cfg = sigpr::SignificantConfig{}.scaled(0.1);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    sigpr::QueryLedger ledger;
    benchmark::DoNotOptimize(sigpr::significant_pageranks(ps.graph, 50, 0.15, seed++, cfg, ledger,
                                                          sigpr::ExecPolicy{static_cast<int>(state.range(0))}));
  }
}
BENCHMARK(BM_SignificantParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
