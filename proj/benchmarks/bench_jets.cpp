#include <benchmark/benchmark.h>

#include "yukawa/jet.hpp"
#include "yukawa/solutions.hpp"

namespace {

using namespace yukawa;

Solution pick(int which) {
  switch (which) {
    case 0: return make_exponential(2, {1.0, 1.0}, {0.5, 0.5});
    case 1: return make_separable(2, HarmonicPolynomial::catalogue("z1z2", 2), 3.0);
    default: return make_planar_harmonic({0.0, 0.0, 1.0}, {0.0, 1.0});
  }
}

void BM_AnalyticJet(benchmark::State& state) {
  const Solution f = pick(static_cast<int>(state.range(0)));
  const BallPoint z(CVec(static_cast<std::size_t>(f.dim()), Complex(0.3, -0.2)));
  for (auto _ : state) benchmark::DoNotOptimize(f.jet(z));
  state.SetLabel(std::string(to_string(f.family())));
}
BENCHMARK(BM_AnalyticJet)->DenseRange(0, 2);

void BM_FiniteDifferenceJet(benchmark::State& state) {
  const Solution f = pick(static_cast<int>(state.range(0)));
  const BallPoint z(CVec(static_cast<std::size_t>(f.dim()), Complex(0.3, -0.2)));
  const PointEvaluator eval = f.evaluator();
  for (auto _ : state) benchmark::DoNotOptimize(finite_difference_jet(eval, z));
  state.SetLabel(std::string(to_string(f.family())));
}
BENCHMARK(BM_FiniteDifferenceJet)->DenseRange(0, 2);

void BM_LaplacianAbsPower(benchmark::State& state) {
  const Solution f = pick(0);
  const Jet j = f.jet(CVec{Complex(0.3, -0.2), Complex(0.1, 0.4)});
  for (auto _ : state) benchmark::DoNotOptimize(laplacian_abs_power(j, 3.0, f.lambda()));
}
BENCHMARK(BM_LaplacianAbsPower);

}  // namespace
