#include <benchmark/benchmark.h>

#include <cmath>

#include "fent/entropy.hpp"
#include "fent/realize.hpp"

namespace {

using namespace fent;

Scenario finite_cycle_fixture() {
  Scenario s;
  s.group = GroupKind::Integers;
  s.kappa = KappaMeasure({{std::int64_t{1}, 0.5}, {std::int64_t{2}, 0.5}});
  s.base = FiniteCycle{2};
  s.cocycle = GeneratorTable{{GroupElement::single(1), GroupElement::single(2)}};
  s.nu = ProductMeasureSpec::constant(std::log(2.0));
  return s;
}

void BM_ExactEntropy(benchmark::State& state) {
  Scenario s = finite_cycle_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(skew_entropy(s).total);
}
BENCHMARK(BM_ExactEntropy);

void BM_McEntropy(benchmark::State& state) {
  Scenario s = finite_cycle_fixture();
  long long samples = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(mc_entropy(s, samples, 1).mean);
  state.SetItemsProcessed(state.iterations() * samples);
}
BENCHMARK(BM_McEntropy)->Arg(10000)->Arg(100000);

void BM_McEntropyWorkers(benchmark::State& state) {
  Scenario s = finite_cycle_fixture();
  int workers = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(mc_entropy(s, 100000, 1, workers).mean);
  state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_McEntropyWorkers)->Arg(1)->Arg(2)->Arg(4);

void BM_RealizeTarget(benchmark::State& state) {
  Scenario s;
  GroupElement f1 = GroupElement::single(1);
  s.group = GroupKind::DirectSumZ2;
  s.kappa = KappaMeasure({{f1, 1.0}});
  s.base = HaarOdometer{};
  s.cocycle = ConstantPerGenerator{{{Element{f1}, f1}}};
  s.nu = ProductMeasureSpec::constant(std::log(2.0));
  for (auto _ : state)
    benchmark::DoNotOptimize(realize_target(s, 1, 2.0, 1e-10).theta_star);
}
BENCHMARK(BM_RealizeTarget);

}  // namespace

BENCHMARK_MAIN();
