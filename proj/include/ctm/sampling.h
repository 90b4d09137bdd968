#pragma once

#include <cstdint>

#include "ctm/aggregate.h"
#include "ctm/simulator.h"
#include "ctm/stats.h"

namespace ctm {

std::uint64_t splitmix64(std::uint64_t x);

// The i-th draw of a counter-based uniform sampler over [0, space); the same
// (seed, i) always yields the same index, independent of thread scheduling.
std::uint64_t sample_index(std::uint64_t seed, std::uint64_t i, std::uint64_t space);

// Uniform sample (with replacement) of the full (n,2) space, run on one blank.
// The result has mode Sampled.
Aggregate sample_full(int states, std::uint64_t samples, std::uint64_t bound, std::uint64_t seed,
                      Symbol blank = 0, int workers = 0);

struct RuntimeSample {
  RuntimeHistogram histogram;
  std::uint64_t halted = 0;
  std::uint64_t filtered = 0;
  std::uint64_t exhausted = 0;
};

// Halting-time histogram of uniformly drawn machines on a 0-filled tape.
RuntimeSample sample_runtimes(int states, std::uint64_t samples, std::uint64_t bound, std::uint64_t seed,
                              int workers = 0);

// Halting-time histogram of every full-space machine on a 0-filled tape
// (the 1-filled histogram is identical by 0-1 symmetry).
RuntimeSample exhaustive_runtimes(int states, std::uint64_t bound, int workers = 0);

}  // namespace ctm
