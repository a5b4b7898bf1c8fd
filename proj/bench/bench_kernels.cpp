// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "sdb/classifier.hpp"
#include "sdb/finite.hpp"
#include "sdb/knot.hpp"
#include "sdb/quandle.hpp"

namespace {

using namespace sdb;

void BM_SdMultiplications(benchmark::State& state, Exec exec) {
  const int type = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_sd_multiplications(type, 5, exec));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(finite::tensor2_count(5)));
}
BENCHMARK_CAPTURE(BM_SdMultiplications, serial, Exec::serial)->Arg(1)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SdMultiplications, parallel, Exec::parallel)->Arg(1)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_SdAlgebras(benchmark::State& state, Exec exec) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_sd_algebras(3, exec));
}
BENCHMARK_CAPTURE(BM_SdAlgebras, serial, Exec::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SdAlgebras, parallel, Exec::parallel)->Unit(benchmark::kMillisecond);

// Pointwise SD scan of a GF(5) carrier that passes (the zero algebra), so all
// 15625 triples are visited.
template <bool Parallel>
void BM_CarrierScan(benchmark::State& state) {
  const auto table = finite::carrier_table(finite::FpTensor(5, 2));
  for (auto _ : state) {
    if constexpr (Parallel) benchmark::DoNotOptimize(finite::parallel::first_sd_violation(table));
    else benchmark::DoNotOptimize(finite::serial::first_sd_violation(table));
  }
}
BENCHMARK_TEMPLATE(BM_CarrierScan, false);
BENCHMARK_TEMPLATE(BM_CarrierScan, true);

template <bool Parallel>
void BM_Colorings(benchmark::State& state) {
  const Diagram eight(PDCode{{{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}}});
  const CayleyTable q = dihedral_quandle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    if constexpr (Parallel) benchmark::DoNotOptimize(count_colorings(eight, q));
    else benchmark::DoNotOptimize(serial::count_colorings(eight, q));
  }
}
BENCHMARK_TEMPLATE(BM_Colorings, false)->Arg(5)->Arg(11)->Arg(31);
BENCHMARK_TEMPLATE(BM_Colorings, true)->Arg(5)->Arg(11)->Arg(31);

}  // namespace

BENCHMARK_MAIN();
