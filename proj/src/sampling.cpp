#include "ctm/sampling.h"

#include <algorithm>
#include <vector>

#include "ctm/runner.h"

namespace ctm {

namespace {
constexpr std::uint64_t kSampleBlock = std::uint64_t{1} << 14;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t sample_index(std::uint64_t seed, std::uint64_t i, std::uint64_t space) {
  // Modulo bias is below space / 2^64, i.e. < 2e-6 for (5,2).
  return splitmix64(splitmix64(seed) ^ i) % space;
}

Aggregate sample_full(int states, std::uint64_t samples, std::uint64_t bound, std::uint64_t seed, Symbol blank,
                      int workers) {
  const std::uint64_t space = space_size(states);
  const AggregateMeta meta{states, bound, AggregateMode::Sampled,
                           blank == 0 ? BlankConvention::Zero : BlankConvention::One};
  const std::uint64_t blocks = (samples + kSampleBlock - 1) / kSampleBlock;
  std::vector<Aggregate> parts(static_cast<std::size_t>(blocks), Aggregate(meta));
  const int threads = workers > 0 ? workers : default_workers();

#pragma omp parallel num_threads(threads)
  {
    Simulator simulator;
#pragma omp for schedule(dynamic, 1)
    for (std::uint64_t b = 0; b < blocks; ++b) {
      Aggregate& part = parts[static_cast<std::size_t>(b)];
      const std::uint64_t end = std::min(samples, (b + 1) * kSampleBlock);
      for (std::uint64_t i = b * kSampleBlock; i < end; ++i) {
        part.add_outcome(simulator.run(decode(states, sample_index(seed, i, space)), blank, bound));
      }
    }
  }

  Aggregate total(meta);
  for (const Aggregate& part : parts) total.merge_from(part);
  return total;
}

namespace {

template <typename IndexOf>
RuntimeSample collect_runtimes(int states, std::uint64_t count, std::uint64_t bound, int workers, IndexOf index_of) {
  const std::uint64_t blocks = (count + kSampleBlock - 1) / kSampleBlock;
  std::vector<RuntimeSample> parts(static_cast<std::size_t>(blocks));
  const int threads = workers > 0 ? workers : default_workers();

#pragma omp parallel num_threads(threads)
  {
    Simulator simulator;
#pragma omp for schedule(dynamic, 1)
    for (std::uint64_t b = 0; b < blocks; ++b) {
      RuntimeSample& part = parts[static_cast<std::size_t>(b)];
      const std::uint64_t end = std::min(count, (b + 1) * kSampleBlock);
      for (std::uint64_t i = b * kSampleBlock; i < end; ++i) {
        const RunOutcome outcome = simulator.run(decode(states, index_of(i)), 0, bound);
        if (const auto* halted = std::get_if<Halted>(&outcome)) {
          ++part.halted;
          part.histogram.add(halted->steps);
        } else if (std::holds_alternative<Filtered>(outcome)) {
          ++part.filtered;
        } else {
          ++part.exhausted;
        }
      }
    }
  }

  RuntimeSample total;
  for (const RuntimeSample& part : parts) {
    total.halted += part.halted;
    total.filtered += part.filtered;
    total.exhausted += part.exhausted;
    for (const auto& [steps, n] : part.histogram.counts) total.histogram.add(steps, n);
  }
  return total;
}

}  // namespace

RuntimeSample sample_runtimes(int states, std::uint64_t samples, std::uint64_t bound, std::uint64_t seed,
                              int workers) {
  const std::uint64_t space = space_size(states);
  return collect_runtimes(states, samples, bound, workers,
                          [seed, space](std::uint64_t i) { return sample_index(seed, i, space); });
}

RuntimeSample exhaustive_runtimes(int states, std::uint64_t bound, int workers) {
  return collect_runtimes(states, space_size(states), bound, workers, [](std::uint64_t i) { return i; });
}

}  // namespace ctm
