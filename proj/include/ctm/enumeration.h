#pragma once

#include <array>
#include <cstdint>
#include <ranges>
#include <vector>

#include "ctm/aggregate.h"
#include "ctm/machine.h"
#include "ctm/simulator.h"

namespace ctm {

using IndexStream = std::ranges::iota_view<std::uint64_t, std::uint64_t>;

// Increasing indices of the full or reduced space; Reduced at n = 1 is empty.
IndexStream enumerate(int states, IndexSpace space);

// Adds, for every string, the same count to its reversal; doubles the
// non-halting and exhausted tallies (the left-moving mirror machines).
Aggregate mirror_completion(const Aggregate& aggregate);

// Adds, for every string, the same count to its complement; doubles the
// tallies. Turns a 0-blank aggregate into a both-blanks aggregate.
Aggregate complement_doubling(const Aggregate& aggregate);

// Lifts a raw reduced 0-blank aggregate to the full (n,2) both-blanks one:
// mirror completion, the (4n+2)^(2n-1) one-step "0" and "1" halters, the
// 4(4n+2)^(2n-1) initial-state loopers, then complement doubling.
Aggregate complete(const Aggregate& raw);

// Runs every machine of (n,2) on both blanks with filters on.
Aggregate full_oracle(int states, std::uint64_t bound, int workers = 0);

struct FilterViolation {
  std::uint64_t index = 0;
  Symbol blank = 0;
  FilterKind which = FilterKind::NoHaltTransition;
  std::uint64_t halted_at = 0;
};

struct AuditReport {
  std::uint64_t runs = 0;
  std::array<std::uint64_t, 3> flagged{};  // indexed by FilterKind
  std::vector<FilterViolation> violations;

  std::uint64_t flagged_total() const { return flagged[0] + flagged[1] + flagged[2]; }
  bool sound() const { return violations.empty(); }
};

// Every full-space machine on both blanks is run with filters on up to
// recheck_bound; each Filtered one is re-run with filters off up to the same
// bound. Any halt is a violation.
AuditReport audit_filters(int states, std::uint64_t recheck_bound, int workers = 0);

// Same check on `samples` uniformly drawn full-space machines (both blanks).
AuditReport audit_filters_sampled(int states, std::uint64_t samples, std::uint64_t seed,
                                  std::uint64_t recheck_bound, int workers = 0);

}  // namespace ctm
