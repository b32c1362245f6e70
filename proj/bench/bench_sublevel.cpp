// Serial reference kernel against the OpenMP kernel on one sublevel rung.

#include "newton_sobolev/poly.hpp"
#include "sublevel/kernels.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace newton_sobolev;

namespace {

kernels::RungTask task_for(benchmark::State& state, Sampler sampler) {
  return {std::ldexp(1.0, -10), 0.25, static_cast<std::uint64_t>(state.range(0)), sampler, 7, 10};
}

const kernels::CompiledPoly& quartic() {
  static const kernels::CompiledPoly g(parse_poly("144*x^2*y^4 + 632*x^6*y^2 + 112*x^10"));
  return g;
}

template <std::uint64_t (*Count)(const kernels::CompiledPoly&, const kernels::RungTask&)>
void run(benchmark::State& state, Sampler sampler) {
  auto task = task_for(state, sampler);
  for (auto _ : state) benchmark::DoNotOptimize(Count(quartic(), task));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(kernels::effective_samples(task)));
}

void BM_serial_prng(benchmark::State& s) { run<kernels::count_hits_serial>(s, Sampler::prng); }
void BM_omp_prng(benchmark::State& s) { run<kernels::count_hits_omp>(s, Sampler::prng); }
void BM_serial_halton(benchmark::State& s) { run<kernels::count_hits_serial>(s, Sampler::halton); }
void BM_omp_halton(benchmark::State& s) { run<kernels::count_hits_omp>(s, Sampler::halton); }

}  // namespace

BENCHMARK(BM_serial_prng)->Arg(1 << 18)->Arg(1 << 22)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_omp_prng)->Arg(1 << 18)->Arg(1 << 22)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_serial_halton)->Arg(1 << 18)->Arg(1 << 22)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_omp_halton)->Arg(1 << 18)->Arg(1 << 22)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
