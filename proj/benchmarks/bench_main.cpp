#include <benchmark/benchmark.h>

#include "jcm/cmnet.hpp"
#include "jcm/decomp.hpp"
#include "jcm/moments.hpp"
#include "jcm/sampling.hpp"
#include "jcm/shifts.hpp"

namespace {

jcm::TwoVarPoly interlaced_poly() { return jcm::TwoVarPoly(jcm::FactoredPoly(1, {1, 3}), jcm::FactoredPoly(1, {2})); }

void BM_JcmCheck(benchmark::State& state) {
  const auto p = interlaced_poly();
  const jcm::Window w(state.range(0), state.range(0));
  const jcm::CheckOptions opts{static_cast<unsigned>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(jcm::jcm_check(p, w, opts));
}
BENCHMARK(BM_JcmCheck)->Args({8, 1})->Args({16, 1})->Args({24, 1})->Args({24, 4})->Unit(benchmark::kMillisecond);

void BM_DifferenceIterated(benchmark::State& state) {
  const auto g = jcm::sample_net(interlaced_poly(), jcm::Window(20, 20));
  const std::size_t k = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(jcm::difference_iterated(g, {0, 0}, {k, k}));
}
BENCHMARK(BM_DifferenceIterated)->Arg(4)->Arg(10)->Arg(20);

void BM_DifferenceBinomial(benchmark::State& state) {
  const auto g = jcm::sample_net(interlaced_poly(), jcm::Window(20, 20));
  const std::size_t k = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(jcm::difference_binomial(g, {0, 0}, {k, k}));
}
BENCHMARK(BM_DifferenceBinomial)->Arg(4)->Arg(10)->Arg(20);

void BM_MeasureMoment(benchmark::State& state) {
  jcm::Rng rng(1);
  const auto p = jcm::random_interlacing(rng, 3);
  const auto d = jcm::partial_fraction_decompose(p.b(), p.a());
  const jcm::WeightParams wp(d.residues.front().value, d.residues.front().root, 0.1);
  const unsigned m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(jcm::measure_moment(wp, m));
}
BENCHMARK(BM_MeasureMoment)->Arg(0)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_BuildProfile(benchmark::State& state) {
  const auto p = interlaced_poly();
  for (auto _ : state) benchmark::DoNotOptimize(jcm::build_profile(p, 1, state.range(0)));
}
BENCHMARK(BM_BuildProfile)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
