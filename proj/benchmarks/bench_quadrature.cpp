#include <benchmark/benchmark.h>

#include "yukawa/gauss_legendre.hpp"
#include "yukawa/green.hpp"
#include "yukawa/means.hpp"
#include "yukawa/quadrature.hpp"
#include "yukawa/solutions.hpp"

namespace {

using namespace yukawa;

void BM_GaussLegendre(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gauss_legendre(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GaussLegendre)->Arg(16)->Arg(64)->Arg(256);

void BM_SphereMeanCircle(benchmark::State& state) {
  const Solution f = make_exponential(1, {1.0}, {0.5});
  const SphereRule rule = sphere_rule(1, static_cast<int>(state.range(0)), SphereMethod::circle_trapezoid);
  for (auto _ : state) benchmark::DoNotOptimize(integral_mean(f, 0.7, 3.0, MeanSelector::value, rule));
}
BENCHMARK(BM_SphereMeanCircle)->Arg(64)->Arg(128)->Arg(512);

void BM_SphereMeanHopf(benchmark::State& state) {
  const Solution f = make_exponential(2, {1.0, 1.0}, {0.5, 0.5});
  const SphereRule rule = sphere_rule(2, static_cast<int>(state.range(0)), SphereMethod::hopf_product);
  for (auto _ : state) benchmark::DoNotOptimize(integral_mean(f, 0.7, 3.0, MeanSelector::value, rule));
}
BENCHMARK(BM_SphereMeanHopf)->Arg(8)->Arg(16)->Arg(32);

void BM_MpRepresentation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Solution f = n == 1 ? make_exponential(1, {1.0}, {0.5}) : make_exponential(2, {1.0, 1.0}, {0.5, 0.5});
  const GreenRules rules{n == 1 ? sphere_rule(1, 128, SphereMethod::circle_trapezoid)
                                : sphere_rule(2, 16, SphereMethod::hopf_product),
                         24};
  for (auto _ : state) benchmark::DoNotOptimize(mp_representation_margin(f, 3.0, 0.6, rules));
}
BENCHMARK(BM_MpRepresentation)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace
