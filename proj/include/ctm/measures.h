#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ctm/aggregate.h"

namespace ctm {

// Raised for well-formed strings that no halting machine produced at this
// state count and bound; malformed strings raise std::invalid_argument.
class NotObserved : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Rational {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;
  double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
};

struct DistributionEntry {
  std::string string;
  std::uint64_t count = 0;
  Rational probability;
  double km = 0.0;  // bits
  int min_n = 0;
  std::uint64_t ld = 0;  // steps
  std::size_t length = 0;
};

// Output-frequency distribution over halting machines.
class Distribution {
 public:
  int states() const { return states_; }
  std::uint64_t bound() const { return bound_; }
  BlankConvention blank() const { return blank_; }
  std::uint64_t halting_total() const { return halting_total_; }

  // Shortlex order.
  const std::vector<DistributionEntry>& entries() const { return entries_; }

  // Throws NotObserved or std::invalid_argument.
  const DistributionEntry& at(std::string_view s) const;
  bool contains(std::string_view s) const { return index_.contains(std::string(s)); }

  // Sum of numerators equals the shared denominator.
  bool sums_to_one() const;

 private:
  friend Distribution build_distribution(const Aggregate& aggregate);

  int states_ = 0;
  std::uint64_t bound_ = 0;
  BlankConvention blank_ = BlankConvention::Both;
  std::uint64_t halting_total_ = 0;
  std::vector<DistributionEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Requires a non-empty aggregate that is not a raw reduced one (those lack
// the symmetric machines and one-step halters).
Distribution build_distribution(const Aggregate& aggregate);

// -log2 of the string's probability.
double km(const Distribution& distribution, std::string_view s);

// Fewest steps among the producers that use the fewest instructions.
std::uint64_t ld_estimate(const Distribution& distribution, std::string_view s);

struct InstructionGroupRow {
  int used_n = 0;
  double mean_km = 0.0;
  double mean_length = 0.0;
  std::size_t string_count = 0;
};

// Rows for used_n = 1..2n, unweighted means over distinct strings; empty
// groups carry NaN means.
std::vector<InstructionGroupRow> instruction_group_table(const Distribution& distribution);

struct RuntimeGroupRow {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  double min_km = 0.0;
  double mean_km = 0.0;
  double max_km = 0.0;
  std::size_t string_count = 0;
};

// Intervals [1, width], [width+1, 2 width], ... tiling [1, bound]; the last
// interval is clipped at the bound.
std::vector<RuntimeGroupRow> runtime_group_table(const Distribution& distribution, std::uint64_t width = 25);

}  // namespace ctm
