#include <benchmark/benchmark.h>

#include "choiceaudit/axioms.hpp"
#include "choiceaudit/fixtures.hpp"
#include "choiceaudit/oracle.hpp"
#include "choiceaudit/rationalize.hpp"
#include "choiceaudit/revealed.hpp"

using namespace choiceaudit;

namespace {

void bench_submask_enumeration(benchmark::State& state) {
  const MenuMask full = mask_for(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::uint64_t visited = 0;
    for (MenuMask m = 1; m <= full; ++m)
      for_each_nonempty_submask(m, [&](MenuMask) { ++visited; });
    benchmark::DoNotOptimize(visited);
  }
}
BENCHMARK(bench_submask_enumeration)->Arg(3)->Arg(8)->Arg(12);

void bench_monotone_enumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t count = 0;
    for_each_operator_table(n, OperatorClass::Monotone,
                            [&](std::span<const MenuMask>) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(bench_monotone_enumeration)->Arg(2)->Arg(3);

void bench_audit_fixture(benchmark::State& state) {
  const auto d = fixture(FixtureId::Example2).dataset;
  for (auto _ : state) {
    const auto report = audit(d);
    benchmark::DoNotOptimize(report.warp_groundedness_discrepancy);
  }
}
BENCHMARK(bench_audit_fixture);

void bench_revealed_closure(benchmark::State& state) {
  const auto d = fixture(FixtureId::Example2).dataset;
  for (auto _ : state) {
    const auto rel = revealed_one_step(d);
    benchmark::DoNotOptimize(rel.cyclic);
  }
}
BENCHMARK(bench_revealed_closure);

void bench_closure_scan(benchmark::State& state) {
  for (auto _ : state) {
    const auto report = verify_characterization(TheoremId::Prop4, 2);
    benchmark::DoNotOptimize(report.equivalence_holds);
  }
}
BENCHMARK(bench_closure_scan);

void bench_derive_choice_function(benchmark::State& state) {
  const auto fix = fixture(FixtureId::Example2);
  for (auto _ : state) {
    const auto derived = derive_choice_function(*fix.agent, fix.dataset.universe());
    benchmark::DoNotOptimize(derived.observation_count());
  }
}
BENCHMARK(bench_derive_choice_function);

}  // namespace

BENCHMARK_MAIN();
