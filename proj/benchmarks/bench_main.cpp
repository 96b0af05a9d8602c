#include <benchmark/benchmark.h>

#include "p1/audit.hpp"
#include "p1/bundle_expr.hpp"
#include "p1/constructions.hpp"
#include "p1/forms.hpp"
#include "p1/graded_map.hpp"

using namespace p1;

static void BM_SymPower(benchmark::State& state) {
  const SplittingType a{6, 6, 6, 5, 4, 4};
  for (auto _ : state) benchmark::DoNotOptimize(sym(static_cast<std::size_t>(state.range(0)), a));
}
BENCHMARK(BM_SymPower)->Arg(2)->Arg(4)->Arg(6);

static void BM_ParseEval(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(expr::eval("Sym2(Sym2(O(3)+O(2)^2)) * Dual(Det(O(3)+O(2)^2))"));
}
BENCHMARK(BM_ParseEval);

static void BM_KernelSplitting(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const GradedMap m = random_general(SplittingType::repeated(2, n + 1), SplittingType::repeated(4, n), 1);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_splitting(m));
}
BENCHMARK(BM_KernelSplitting)->Arg(2)->Arg(4)->Arg(6);

static void BM_GenericRank(benchmark::State& state) {
  const GradedMap comp = c_composite(sigma2_sharp(0).value);
  for (auto _ : state) benchmark::DoNotOptimize(generic_rank(comp));
}
BENCHMARK(BM_GenericRank);

static void BM_CompositeCokernel(benchmark::State& state) {
  const GradedMap comp = c_composite(sigma2_sharp(0).value);
  for (auto _ : state) benchmark::DoNotOptimize(cokernel_sheaf(comp));
}
BENCHMARK(BM_CompositeCokernel)->Unit(benchmark::kMillisecond);

static void BM_CriticalValues(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Rng rng(seed++);
    const BinaryForm f = critical_value_form(random_form(3, rng, 10), random_form(4, rng, 10));
    benchmark::DoNotOptimize(distinct_root_count(f));
  }
}
BENCHMARK(BM_CriticalValues);

static void BM_FullAudit(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(audit::run(audit::Selection::all, 0, state.range(0) != 0));
}
BENCHMARK(BM_FullAudit)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
