// SPDX-License-Identifier: Apache-2.0

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <vector>

#include "dirichlet/kernels.hpp"

namespace {

using namespace dirichlet;

kernels::LineTerms eta_line(Index terms) {
  std::vector<Complex> coeffs(static_cast<std::size_t>(terms));
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = (i % 2 == 0) ? 1.0 : -1.0;
  return kernels::prepare_line(coeffs, 0.5);
}

template <auto Kernel>
void BM_MaxAbs(benchmark::State& state) {
  const auto terms = eta_line(state.range(0));
  const kernels::LineGrid grid{0.0, 0.5, 1024};
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(terms, grid));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 1024);
}

template <auto Kernel>
void BM_RuleSum(benchmark::State& state) {
  const auto rule = CoefficientRule::zeta_shift(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Kernel(rule, 1, state.range(0), HalfPlanePoint(0.5, 3.0)));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_MaxAbs<kernels::max_abs_serial>)->Arg(1 << 10)->Arg(1 << 13);
BENCHMARK(BM_MaxAbs<kernels::max_abs_parallel>)->Arg(1 << 10)->Arg(1 << 13);
BENCHMARK(BM_RuleSum<kernels::rule_sum_serial>)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_RuleSum<kernels::rule_sum_parallel>)->Arg(1 << 16)->Arg(1 << 20);

}  // namespace

BENCHMARK_MAIN();
