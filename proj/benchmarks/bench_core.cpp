#include <benchmark/benchmark.h>

#include <vector>

#include "extsnyder/algebra.hpp"
#include "extsnyder/eigensolver.hpp"
#include "extsnyder/hamiltonians.hpp"
#include "extsnyder/perturbation.hpp"
#include "extsnyder/realizations.hpp"

using namespace extsnyder;

namespace {

ModelParams params(int d, int n_max) {
  ModelParams p;
  p.dim = d;
  p.n_max = n_max;
  p.lambda = 0.1;
  return p;
}

// Args: D, n_max.
void BM_BuildCovariantInteraction(benchmark::State& state) {
  const ModelParams p = params(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const auto basis = enumerate_basis(p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_interaction(basis, p, ModelKind::CovariantExtended, RealizationKind::WeylUnified));
  }
  state.counters["dim"] = static_cast<double>(basis->dimension());
}
BENCHMARK(BM_BuildCovariantInteraction)->Args({2, 4})->Args({2, 8})->Args({3, 3})->Unit(benchmark::kMillisecond);

void BM_WeylCoordinateCommutator(benchmark::State& state) {
  const ModelParams p = params(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const auto ops = realize(enumerate_basis(p), p, RealizationKind::Weyl);
  for (auto _ : state) benchmark::DoNotOptimize(commutator(ops.x(1), ops.x(2)));
}
BENCHMARK(BM_WeylCoordinateCommutator)->Args({2, 6})->Args({3, 4})->Unit(benchmark::kMicrosecond);

void BM_WeylAlgebraReport(benchmark::State& state) {
  const ModelParams p = params(2, 6);
  const auto basis = enumerate_basis(p);
  const std::vector<double> lambdas{0.05, 0.1, 0.2};
  for (auto _ : state) benchmark::DoNotOptimize(algebra_report(basis, p, RealizationKind::Weyl, lambdas, 4));
}
BENCHMARK(BM_WeylAlgebraReport)->Unit(benchmark::kMillisecond);

void BM_DegenerateCorrection(benchmark::State& state) {
  const ModelParams p = params(2, static_cast<int>(state.range(0)));
  const auto basis = enumerate_basis(p);
  const auto parts = build_parts(basis, p, ModelKind::SplitTwoFrequencyWeyl, RealizationKind::Weyl);
  for (auto _ : state) benchmark::DoNotOptimize(degenerate_correction(parts.h0, parts.v));
}
BENCHMARK(BM_DegenerateCorrection)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

// Args: n_max, force the iterative path (0/1). D = 2.
void BM_LowestEigenvalues(benchmark::State& state) {
  const ModelParams p = params(2, static_cast<int>(state.range(0)));
  const auto basis = enumerate_basis(p);
  const Operator h = build_parts(basis, p, ModelKind::SplitTwoFrequencyWeyl, RealizationKind::Weyl).full(p.lambda);
  EigenOptions opt;
  opt.force_iterative = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(exact_spectrum(h, 6, opt));
  state.counters["dim"] = static_cast<double>(basis->dimension());
}
BENCHMARK(BM_LowestEigenvalues)->Args({8, 0})->Args({8, 1})->Args({16, 1})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
