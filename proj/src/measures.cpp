#include "ctm/measures.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ctm {

namespace {

void require_binary(std::string_view s) {
  if (s.empty() || s.find_first_not_of("01") != std::string_view::npos) {
    throw std::invalid_argument("'" + std::string(s) + "' is not a non-empty binary string");
  }
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

const DistributionEntry& Distribution::at(std::string_view s) const {
  require_binary(s);
  const auto it = index_.find(std::string(s));
  if (it == index_.end()) {
    throw NotObserved("'" + std::string(s) + "' not observed in D(" + std::to_string(states_) +
                      ",2) at bound " + std::to_string(bound_));
  }
  return entries_[it->second];
}

bool Distribution::sums_to_one() const {
  std::uint64_t sum = 0;
  for (const DistributionEntry& e : entries_) {
    if (e.probability.denominator != halting_total_) return false;
    sum += e.probability.numerator;
  }
  return sum == halting_total_;
}

Distribution build_distribution(const Aggregate& aggregate) {
  if (aggregate.meta().mode == AggregateMode::RawReduced) {
    throw std::invalid_argument("raw reduced aggregate must be completed before building a distribution");
  }
  if (aggregate.halting() == 0) throw std::invalid_argument("aggregate has no halting machines");

  Distribution d;
  d.states_ = aggregate.meta().states;
  d.bound_ = aggregate.meta().bound;
  d.blank_ = aggregate.meta().blank;
  d.halting_total_ = aggregate.halting();
  const double log_total = std::log2(static_cast<double>(d.halting_total_));
  for (auto& [s, record] : aggregate.sorted_records()) {
    DistributionEntry e;
    e.count = record.count;
    e.probability = {record.count, d.halting_total_};
    e.km = log_total - std::log2(static_cast<double>(record.count));
    e.min_n = record.min_n;
    e.ld = record.min_t;
    e.length = s.size();
    e.string = s;
    d.index_.emplace(s, d.entries_.size());
    d.entries_.push_back(std::move(e));
  }
  return d;
}

double km(const Distribution& distribution, std::string_view s) { return distribution.at(s).km; }

std::uint64_t ld_estimate(const Distribution& distribution, std::string_view s) { return distribution.at(s).ld; }

std::vector<InstructionGroupRow> instruction_group_table(const Distribution& distribution) {
  const int groups = 2 * distribution.states();
  std::vector<InstructionGroupRow> rows(static_cast<std::size_t>(groups));
  std::vector<double> km_sum(rows.size(), 0.0), length_sum(rows.size(), 0.0);
  for (int i = 0; i < groups; ++i) rows[static_cast<std::size_t>(i)].used_n = i + 1;
  for (const DistributionEntry& e : distribution.entries()) {
    const auto g = static_cast<std::size_t>(e.min_n - 1);
    ++rows[g].string_count;
    km_sum[g] += e.km;
    length_sum[g] += static_cast<double>(e.length);
  }
  for (std::size_t g = 0; g < rows.size(); ++g) {
    const auto count = static_cast<double>(rows[g].string_count);
    rows[g].mean_km = rows[g].string_count ? km_sum[g] / count : kNaN;
    rows[g].mean_length = rows[g].string_count ? length_sum[g] / count : kNaN;
  }
  return rows;
}

std::vector<RuntimeGroupRow> runtime_group_table(const Distribution& distribution, std::uint64_t width) {
  if (width < 1) throw std::invalid_argument("runtime group width must be at least 1");
  std::vector<RuntimeGroupRow> rows;
  for (std::uint64_t lo = 1; lo <= distribution.bound(); lo += width) {
    rows.push_back({lo, std::min(distribution.bound(), lo + width - 1), kNaN, kNaN, kNaN, 0});
  }
  std::vector<double> sums(rows.size(), 0.0);
  for (const DistributionEntry& e : distribution.entries()) {
    auto& row = rows[static_cast<std::size_t>((e.ld - 1) / width)];
    if (row.string_count == 0) {
      row.min_km = row.max_km = e.km;
    } else {
      row.min_km = std::min(row.min_km, e.km);
      row.max_km = std::max(row.max_km, e.km);
    }
    ++row.string_count;
    sums[static_cast<std::size_t>((e.ld - 1) / width)] += e.km;
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].string_count) rows[i].mean_km = sums[i] / static_cast<double>(rows[i].string_count);
  }
  return rows;
}

}  // namespace ctm
