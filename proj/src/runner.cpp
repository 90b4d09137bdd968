#include "ctm/runner.h"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>

#include "ctm/distribution_file.h"

namespace ctm {

namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ull;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;

void fnv_mix(std::uint64_t& hash, std::string_view text) {
  for (unsigned char c : text) {
    hash ^= c;
    hash *= kFnvPrime;
  }
}

void append_chunks(Plan& plan, int states, IndexSpace space, Symbol blank, std::uint64_t bound,
                   std::uint64_t chunk_size, Filters filters) {
  if (chunk_size == 0) throw std::invalid_argument("chunk size must be positive");
  const std::uint64_t size = space == IndexSpace::Full ? space_size(states) : reduced_size(states);
  for (std::uint64_t begin = 0; begin < size; begin += chunk_size) {
    plan.chunks.push_back({states, space, blank, bound, filters, begin, std::min(size, begin + chunk_size)});
  }
}

}  // namespace

std::uint64_t Plan::digest() const {
  std::uint64_t hash = kFnvOffset;
  fnv_mix(hash, "codec=" + std::to_string(kCodecVersion) + ";states=" + std::to_string(meta.states) +
                    ";bound=" + std::to_string(meta.bound) + ";mode=" + to_string(meta.mode) +
                    ";blank=" + to_string(meta.blank) + ";");
  for (const ChunkSpec& c : chunks) {
    fnv_mix(hash, std::to_string(c.states) + (c.space == IndexSpace::Full ? "F" : "R") +
                      std::to_string(c.blank) + "/" + std::to_string(c.bound) +
                      (c.filters == Filters::On ? "+" : "-") + std::to_string(c.begin) + ":" +
                      std::to_string(c.end) + ";");
  }
  return hash;
}

AggregateMeta chunk_meta(const ChunkSpec& spec) {
  return {spec.states, spec.bound,
          spec.space == IndexSpace::Full ? AggregateMode::RawFull : AggregateMode::RawReduced,
          spec.blank == 0 ? BlankConvention::Zero : BlankConvention::One};
}

Plan make_plan(int states, IndexSpace space, Symbol blank, std::uint64_t bound, std::uint64_t chunk_size,
               Filters filters) {
  Plan plan;
  plan.meta = chunk_meta({states, space, blank, bound, filters, 0, 0});
  append_chunks(plan, states, space, blank, bound, chunk_size, filters);
  return plan;
}

Plan make_oracle_plan(int states, std::uint64_t bound, std::uint64_t chunk_size, Filters filters) {
  Plan plan;
  plan.meta = {states, bound, AggregateMode::FullOracle, BlankConvention::Both};
  append_chunks(plan, states, IndexSpace::Full, 0, bound, chunk_size, filters);
  append_chunks(plan, states, IndexSpace::Full, 1, bound, chunk_size, filters);
  return plan;
}

Aggregate run_chunk(const ChunkSpec& spec) { return run_chunk(spec, chunk_meta(spec)); }

Aggregate run_chunk(const ChunkSpec& spec, const AggregateMeta& meta) {
  Aggregate aggregate(meta);
  Simulator simulator;
  for (std::uint64_t index = spec.begin; index < spec.end; ++index) {
    const TransitionTable table = spec.space == IndexSpace::Full ? decode(spec.states, index)
                                                                 : decode_reduced(spec.states, index);
    aggregate.add_outcome(simulator.run(table, spec.blank, spec.bound, spec.filters));
  }
  return aggregate;
}

Aggregate merge(const Aggregate& a, const Aggregate& b) {
  Aggregate out = a;
  out.merge_from(b);
  return out;
}

std::uint64_t default_bound(int states) {
  space_size(states);
  if (states <= 3) return 200;
  if (states == 4) return 107;
  return 500;
}

int default_workers() {
  if (const char* env = std::getenv("CTM_WORKERS")) {
    const int workers = std::atoi(env);
    if (workers > 0) return workers;
  }
  return omp_get_max_threads();
}

OrchestrateResult orchestrate(const Plan& plan, const OrchestrateOptions& options) {
  const int workers = options.workers > 0 ? options.workers : default_workers();
  const std::size_t stripe = std::max<std::size_t>(1, options.stripe_chunks);
  const std::uint64_t digest = plan.digest();

  Checkpoint state{digest, std::vector<bool>(plan.chunks.size(), false), Aggregate(plan.meta)};
  if (options.checkpoint) {
    if (auto loaded = load_checkpoint(*options.checkpoint)) {
      if (loaded->digest != digest || loaded->completed.size() != plan.chunks.size()) {
        throw CheckpointError("checkpoint " + options.checkpoint->string() + " does not match this plan");
      }
      if (!(loaded->partial.meta() == plan.meta)) throw CheckpointError("checkpoint aggregate meta mismatch");
      state = std::move(*loaded);
    }
  }

  std::vector<std::size_t> pending;
  for (std::size_t id = 0; id < plan.chunks.size(); ++id) {
    if (!state.completed[id]) pending.push_back(id);
  }

  std::size_t stripes_run = 0;
  for (std::size_t first = 0; first < pending.size(); first += stripe) {
    if (options.max_stripes && stripes_run == *options.max_stripes) {
      const auto done = static_cast<std::size_t>(std::ranges::count(state.completed, true));
      return {std::move(state.partial), false, done};
    }
    const std::size_t last = std::min(pending.size(), first + stripe);
    std::vector<Aggregate> results(last - first);
    std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (std::size_t i = first; i < last; ++i) {
      try {
        results[i - first] = run_chunk(plan.chunks[pending[i]], plan.meta);
      } catch (...) {
#pragma omp critical
        failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);

    for (std::size_t i = first; i < last; ++i) {
      state.partial.merge_from(results[i - first]);
      state.completed[pending[i]] = true;
    }
    ++stripes_run;
    if (options.checkpoint) save_checkpoint(*options.checkpoint, state);
  }
  return {std::move(state.partial), true, plan.chunks.size()};
}

Aggregate orchestrate_serial(const Plan& plan) {
  Aggregate aggregate(plan.meta);
  for (const ChunkSpec& chunk : plan.chunks) aggregate.merge_from(run_chunk(chunk, plan.meta));
  return aggregate;
}

}  // namespace ctm
