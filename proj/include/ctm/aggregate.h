#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ctm/simulator.h"

namespace ctm {

enum class AggregateMode { RawFull, RawReduced, Completed, FullOracle, Sampled };
enum class BlankConvention { Zero, One, Both };

const char* to_string(AggregateMode mode);
const char* to_string(BlankConvention blank);
AggregateMode parse_aggregate_mode(std::string_view text);
BlankConvention parse_blank_convention(std::string_view text);

struct AggregateMeta {
  int states = 1;
  std::uint64_t bound = 1;
  AggregateMode mode = AggregateMode::RawFull;
  BlankConvention blank = BlankConvention::Zero;
  friend bool operator==(const AggregateMeta&, const AggregateMeta&) = default;
};

// min_n is the fewest distinct instructions among producers; min_t the fewest
// steps among producers attaining min_n.
struct StringRecord {
  std::uint64_t count = 0;
  int min_n = 0;
  std::uint64_t min_t = 0;
  friend bool operator==(const StringRecord&, const StringRecord&) = default;
};

// Keeps the smaller min_n; on a tie, the smaller min_t.
void absorb(StringRecord& into, const StringRecord& other);

// Bit-order-independent string complement and reversal.
std::string reversed(std::string_view s);
std::string complemented(std::string_view s);

class Aggregate {
 public:
  using Records = std::unordered_map<std::string, StringRecord>;

  Aggregate() = default;
  explicit Aggregate(AggregateMeta meta) : meta_(meta) {}

  const AggregateMeta& meta() const { return meta_; }
  void set_meta(const AggregateMeta& meta) { meta_ = meta; }

  const Records& records() const { return records_; }
  std::uint64_t nonhalting() const { return nonhalting_; }
  std::uint64_t exhausted() const { return exhausted_; }
  std::uint64_t machines_total() const { return halting_ + nonhalting_ + exhausted_; }
  std::uint64_t halting() const { return halting_; }

  void add_outcome(const RunOutcome& outcome);
  void add_string(const std::string& s, const StringRecord& record);
  void add_nonhalting(std::uint64_t count) { nonhalting_ += count; }
  void add_exhausted(std::uint64_t count) { exhausted_ += count; }

  // Adds counts and tallies of other; meta must match.
  void merge_from(const Aggregate& other);

  // Records ordered by (length, lexicographic).
  std::vector<std::pair<std::string, StringRecord>> sorted_records() const;

  // Throws std::logic_error describing the first violated invariant.
  void check_invariants() const;

  friend bool operator==(const Aggregate& a, const Aggregate& b);

 private:
  AggregateMeta meta_{};
  Records records_;
  std::uint64_t halting_ = 0;
  std::uint64_t nonhalting_ = 0;
  std::uint64_t exhausted_ = 0;
};

// First field (tally or record) in which the two aggregates differ, ignoring
// the mode label; empty if their contents are identical.
std::optional<std::string> first_difference(const Aggregate& a, const Aggregate& b);

bool shortlex_less(std::string_view a, std::string_view b);

}  // namespace ctm
