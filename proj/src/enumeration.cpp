#include "ctm/enumeration.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "ctm/runner.h"
#include "ctm/sampling.h"

namespace ctm {

namespace {

constexpr std::uint64_t kAuditBlock = 4096;

std::uint64_t one_step_halters(int states) { return space_size(states) / instruction_count(states); }

void absorb_report(AuditReport& into, const AuditReport& block) {
  into.runs += block.runs;
  for (std::size_t k = 0; k < into.flagged.size(); ++k) into.flagged[k] += block.flagged[k];
  into.violations.insert(into.violations.end(), block.violations.begin(), block.violations.end());
}

template <typename IndexOf>
AuditReport audit_range(int states, std::uint64_t count, std::uint64_t bound, int workers, IndexOf index_of) {
  const std::uint64_t blocks = (count + kAuditBlock - 1) / kAuditBlock;
  std::vector<AuditReport> reports(static_cast<std::size_t>(blocks));
  const int threads = workers > 0 ? workers : default_workers();

#pragma omp parallel num_threads(threads)
  {
    Simulator simulator;
    std::vector<TransitionTable> tables;
    std::vector<Symbol> blanks;
    std::vector<std::uint64_t> indices;
    std::vector<FilterKind> kinds;
#pragma omp for schedule(dynamic, 1)
    for (std::uint64_t b = 0; b < blocks; ++b) {
      AuditReport& report = reports[static_cast<std::size_t>(b)];
      tables.clear();
      blanks.clear();
      indices.clear();
      kinds.clear();
      const std::uint64_t end = std::min(count, (b + 1) * kAuditBlock);
      for (std::uint64_t i = b * kAuditBlock; i < end; ++i) {
        const std::uint64_t index = index_of(i);
        const TransitionTable table = decode(states, index);
        for (Symbol blank = 0; blank <= 1; ++blank) {
          ++report.runs;
          const RunOutcome outcome = simulator.run(table, blank, bound, Filters::On);
          if (const auto* filtered = std::get_if<Filtered>(&outcome)) {
            ++report.flagged[static_cast<std::size_t>(filtered->which)];
            tables.push_back(table);
            blanks.push_back(blank);
            indices.push_back(index);
            kinds.push_back(filtered->which);
          }
        }
      }
      const std::vector<std::uint64_t> halted = batch_halting_steps(tables, blanks, bound);
      for (std::size_t j = 0; j < halted.size(); ++j) {
        if (halted[j] != 0) report.violations.push_back({indices[j], blanks[j], kinds[j], halted[j]});
      }
    }
  }

  AuditReport total;
  for (const AuditReport& r : reports) absorb_report(total, r);
  return total;
}

}  // namespace

IndexStream enumerate(int states, IndexSpace space) {
  if (space == IndexSpace::Reduced && states < 2) {
    space_size(states);
    return IndexStream(0, 0);
  }
  const std::uint64_t size = space == IndexSpace::Full ? space_size(states) : reduced_size(states);
  return IndexStream(0, size);
}

Aggregate mirror_completion(const Aggregate& aggregate) {
  Aggregate out = aggregate;
  for (const auto& [s, record] : aggregate.records()) out.add_string(reversed(s), record);
  out.add_nonhalting(aggregate.nonhalting());
  out.add_exhausted(aggregate.exhausted());
  return out;
}

Aggregate complement_doubling(const Aggregate& aggregate) {
  if (aggregate.meta().blank == BlankConvention::Both) {
    throw std::invalid_argument("aggregate already covers both blanks");
  }
  AggregateMeta meta = aggregate.meta();
  meta.blank = BlankConvention::Both;
  Aggregate out = aggregate;
  out.set_meta(meta);
  for (const auto& [s, record] : aggregate.records()) out.add_string(complemented(s), record);
  out.add_nonhalting(aggregate.nonhalting());
  out.add_exhausted(aggregate.exhausted());
  return out;
}

Aggregate complete(const Aggregate& raw) {
  if (raw.meta().mode != AggregateMode::RawReduced || raw.meta().blank != BlankConvention::Zero) {
    throw std::invalid_argument("completion requires a raw reduced aggregate on a 0-filled tape");
  }
  const int states = raw.meta().states;
  Aggregate full_zero = mirror_completion(raw);

  const std::uint64_t halters = one_step_halters(states);
  full_zero.add_string("1", {halters, 1, 1});
  full_zero.add_string("0", {halters, 1, 1});
  full_zero.add_nonhalting(4 * halters);

  AggregateMeta meta = raw.meta();
  meta.mode = AggregateMode::Completed;
  full_zero.set_meta(meta);
  return complement_doubling(full_zero);
}

Aggregate full_oracle(int states, std::uint64_t bound, int workers) {
  OrchestrateOptions options;
  options.workers = workers;
  return orchestrate(make_oracle_plan(states, bound), options).aggregate;
}

AuditReport audit_filters(int states, std::uint64_t recheck_bound, int workers) {
  return audit_range(states, space_size(states), recheck_bound, workers, [](std::uint64_t i) { return i; });
}

AuditReport audit_filters_sampled(int states, std::uint64_t samples, std::uint64_t seed,
                                  std::uint64_t recheck_bound, int workers) {
  const std::uint64_t space = space_size(states);
  return audit_range(states, samples, recheck_bound, workers,
                     [seed, space](std::uint64_t i) { return sample_index(seed, i, space); });
}

}  // namespace ctm
