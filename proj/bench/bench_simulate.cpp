// Parallel kernels against their serial counterparts.

#include <benchmark/benchmark.h>

#include "coflow/experiment.hpp"
#include "coflow/scheduler.hpp"
#include "coflow/workload.hpp"

namespace {

using namespace coflow;

struct Prepared {
  Instance instance;
  Permutation order;
  Assignment assignment;
};

Prepared prepare(int coflows, int cores) {
  GeneratorOptions gen;
  gen.cores = cores;
  gen.release_spread = 2000;
  Prepared p;
  p.instance = gen_mix(coflows, 50, 99, gen);
  p.order = order_flow_level(p.instance);
  p.assignment = assign_fdls(p.instance, p.order);
  return p;
}

void BM_SimulateParallel(benchmark::State& state) {
  const Prepared p = prepare(static_cast<int>(state.range(0)), 8);
  SimulationOptions opts;
  opts.parallel = true;
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate(p.instance, p.order, p.assignment, opts));
  }
}

void BM_SimulateSerial(benchmark::State& state) {
  const Prepared p = prepare(static_cast<int>(state.range(0)), 8);
  SimulationOptions opts;
  opts.parallel = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate(p.instance, p.order, p.assignment, opts));
  }
}

void BM_SimulateReference(benchmark::State& state) {
  const Prepared p = prepare(static_cast<int>(state.range(0)), 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_reference(p.instance, p.order, p.assignment));
  }
}

void run_batch(benchmark::State& state, bool parallel) {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::kBox;
  cfg.coflows = {static_cast<int>(state.range(0))};
  cfg.cores = {5};
  cfg.instances = 16;
  cfg.parallel = parallel;
  for (auto _ : state) benchmark::DoNotOptimize(run_experiment(cfg));
}

void BM_ExperimentParallel(benchmark::State& state) { run_batch(state, true); }
void BM_ExperimentSerial(benchmark::State& state) { run_batch(state, false); }

}  // namespace

BENCHMARK(BM_SimulateParallel)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SimulateSerial)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SimulateReference)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExperimentParallel)->Arg(25)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExperimentSerial)->Arg(25)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
