#include <benchmark/benchmark.h>

#include <z2norm/oracle.hpp>
#include <z2norm/report.hpp>

namespace {

using namespace z2norm;

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::Parallel : Execution::Serial; }

void BM_GridAgreement(benchmark::State& state) {
  for (auto _ : state) {
    auto r = oracle::grid_distance_agreement(15, 30, mode(state));
    benchmark::DoNotOptimize(r.mismatches);
  }
}
BENCHMARK(BM_GridAgreement)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ConjugatorSearch(benchmark::State& state) {
  oracle::ConjugatorSearch search(20);
  // Trace 3 can never conjugate to a negative shear, so every candidate in
  // the box is tried.
  const auto A = GL2Matrix::from_rows(2, 1, 1, 1);
  for (auto _ : state) {
    auto r = search.find(A, oracle::is_negative_shear, mode(state));
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_ConjugatorSearch)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
  std::vector<report::CensusInput> inputs;
  oracle::Rng rng(2026);
  for (int i = 0; i < 2000; ++i)
    inputs.push_back({oracle::random_glz(rng, 16), i % 3 ? report::ManifoldKind::Bundle : report::ManifoldKind::SemiBundle});
  for (auto _ : state) {
    auto rows = report::census(inputs, mode(state));
    benchmark::DoNotOptimize(rows.data());
  }
}
BENCHMARK(BM_Census)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
