#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "ctm/aggregate.h"
#include "ctm/checkpoint.h"
#include "ctm/machine.h"
#include "ctm/simulator.h"

namespace ctm {

inline constexpr std::uint64_t kDefaultChunkSize = std::uint64_t{1} << 16;
inline constexpr std::size_t kDefaultStripeChunks = 64;

// A half-open range of machine indices run under one configuration.
struct ChunkSpec {
  int states = 1;
  IndexSpace space = IndexSpace::Full;
  Symbol blank = 0;
  std::uint64_t bound = 1;
  Filters filters = Filters::On;
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
  friend bool operator==(const ChunkSpec&, const ChunkSpec&) = default;
};

// Chunks that together partition an index space (or several, for multi-blank
// plans), plus the meta every chunk result is aggregated under.
struct Plan {
  AggregateMeta meta;
  std::vector<ChunkSpec> chunks;

  // FNV-1a over a canonical description of the meta, codec version and chunks.
  std::uint64_t digest() const;
};

Plan make_plan(int states, IndexSpace space, Symbol blank, std::uint64_t bound,
               std::uint64_t chunk_size = kDefaultChunkSize, Filters filters = Filters::On);

// Every full-space machine on both a 0-filled and a 1-filled tape.
Plan make_oracle_plan(int states, std::uint64_t bound, std::uint64_t chunk_size = kDefaultChunkSize,
                      Filters filters = Filters::On);

AggregateMeta chunk_meta(const ChunkSpec& spec);

Aggregate run_chunk(const ChunkSpec& spec);
Aggregate run_chunk(const ChunkSpec& spec, const AggregateMeta& meta);

Aggregate merge(const Aggregate& a, const Aggregate& b);

struct OrchestrateOptions {
  int workers = 0;  // 0 = default_workers()
  std::optional<std::filesystem::path> checkpoint;
  std::size_t stripe_chunks = kDefaultStripeChunks;
  // Stop after this many stripes in this invocation (simulates an interruption).
  std::optional<std::size_t> max_stripes;
};

struct OrchestrateResult {
  Aggregate aggregate;
  bool complete = false;
  std::size_t chunks_done = 0;
};

// Parallel over chunks with OpenMP; one reduction per stripe, in chunk order.
OrchestrateResult orchestrate(const Plan& plan, const OrchestrateOptions& options = {});

// Single-threaded reference path.
Aggregate orchestrate_serial(const Plan& plan);

// Step bound used when none is given: 200 up to 3 states, the 4-state Busy
// Beaver runtime 107 at n = 4, and 500 at n = 5.
std::uint64_t default_bound(int states);

// CTM_WORKERS if set and positive, otherwise the OpenMP default.
int default_workers();

}  // namespace ctm
