#include <benchmark/benchmark.h>

#include <random>

#include "ctm/enumeration.h"
#include "ctm/runner.h"
#include "ctm/simulator.h"

using namespace ctm;

namespace {

// (3,2) reduced space with filters on a 0 tape: the work complete() needs.
void BM_ReducedFiltered(benchmark::State& state) {
  const auto bound = static_cast<std::uint64_t>(state.range(0));
  const Plan plan = make_plan(3, IndexSpace::Reduced, 0, bound);
  for (auto _ : state) benchmark::DoNotOptimize(orchestrate(plan).aggregate.halting());
  state.counters["machines"] = static_cast<double>(reduced_size(3));
}

// Every (3,2) machine on both blanks with no detectors.
void BM_FullUnfilteredBothBlanks(benchmark::State& state) {
  const auto bound = static_cast<std::uint64_t>(state.range(0));
  const Plan plan = make_oracle_plan(3, bound, kDefaultChunkSize, Filters::Off);
  for (auto _ : state) benchmark::DoNotOptimize(orchestrate(plan).aggregate.halting());
  state.counters["machines"] = static_cast<double>(2 * space_size(3));
}

void BM_OrchestrateSerial(benchmark::State& state) {
  const Plan plan = make_plan(3, IndexSpace::Reduced, 0, 100, 1 << 14);
  for (auto _ : state) benchmark::DoNotOptimize(orchestrate_serial(plan).halting());
}

void BM_OrchestrateParallel(benchmark::State& state) {
  const Plan plan = make_plan(3, IndexSpace::Reduced, 0, 100, 1 << 14);
  OrchestrateOptions options;
  options.workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(orchestrate(plan, options).aggregate.halting());
}

std::vector<TransitionTable> random_tables(int n, std::size_t count) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::uint64_t> pick(0, space_size(n) - 1);
  std::vector<TransitionTable> tables;
  for (std::size_t i = 0; i < count; ++i) tables.push_back(decode(n, pick(rng)));
  return tables;
}

// Unfiltered re-runs, one machine at a time vs the lockstep kernel.
void BM_RecheckSingle(benchmark::State& state) {
  const auto tables = random_tables(3, 4096);
  Simulator sim;
  std::uint64_t steps = 0;
  for (auto _ : state) {
    for (const auto& t : tables) {
      const RunOutcome o = sim.run(t, 0, 2000, Filters::Off);
      steps += std::holds_alternative<Halted>(o) ? std::get<Halted>(o).steps : 2000;
    }
  }
  state.counters["steps/s"] = benchmark::Counter(static_cast<double>(steps), benchmark::Counter::kIsRate);
}

void BM_RecheckBatch(benchmark::State& state) {
  const auto tables = random_tables(3, 4096);
  const std::vector<Symbol> blanks(tables.size(), 0);
  std::uint64_t steps = 0;
  for (auto _ : state) {
    for (std::uint64_t s : batch_halting_steps(tables, blanks, 2000)) steps += s ? s : 2000;
  }
  state.counters["steps/s"] = benchmark::Counter(static_cast<double>(steps), benchmark::Counter::kIsRate);
}

}  // namespace

BENCHMARK(BM_ReducedFiltered)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FullUnfilteredBothBlanks)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond)->UseRealTime()->Iterations(1);
BENCHMARK(BM_OrchestrateSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OrchestrateParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RecheckSingle)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RecheckBatch)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
