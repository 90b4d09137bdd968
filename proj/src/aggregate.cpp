#include "ctm/aggregate.h"

#include <algorithm>
#include <stdexcept>

namespace ctm {

const char* to_string(AggregateMode mode) {
  switch (mode) {
    case AggregateMode::RawFull:
      return "raw-full";
    case AggregateMode::RawReduced:
      return "raw-reduced";
    case AggregateMode::Completed:
      return "completed";
    case AggregateMode::FullOracle:
      return "full-oracle";
    case AggregateMode::Sampled:
      return "sampled";
  }
  return "unknown";
}

const char* to_string(BlankConvention blank) {
  switch (blank) {
    case BlankConvention::Zero:
      return "0";
    case BlankConvention::One:
      return "1";
    case BlankConvention::Both:
      return "both";
  }
  return "unknown";
}

AggregateMode parse_aggregate_mode(std::string_view text) {
  for (auto mode : {AggregateMode::RawFull, AggregateMode::RawReduced, AggregateMode::Completed,
                    AggregateMode::FullOracle, AggregateMode::Sampled}) {
    if (text == to_string(mode)) return mode;
  }
  throw std::invalid_argument("unknown aggregate mode '" + std::string(text) + "'");
}

BlankConvention parse_blank_convention(std::string_view text) {
  for (auto blank : {BlankConvention::Zero, BlankConvention::One, BlankConvention::Both}) {
    if (text == to_string(blank)) return blank;
  }
  throw std::invalid_argument("unknown blank convention '" + std::string(text) + "'");
}

void absorb(StringRecord& into, const StringRecord& other) {
  if (into.count == 0) {
    into = other;
    return;
  }
  into.count += other.count;
  if (other.min_n < into.min_n || (other.min_n == into.min_n && other.min_t < into.min_t)) {
    into.min_n = other.min_n;
    into.min_t = other.min_t;
  }
}

std::string reversed(std::string_view s) { return {s.rbegin(), s.rend()}; }

std::string complemented(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = c == '0' ? '1' : '0';
  return out;
}

bool shortlex_less(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void Aggregate::add_outcome(const RunOutcome& outcome) {
  if (const auto* halted = std::get_if<Halted>(&outcome)) {
    add_string(halted->output, {1, halted->used, halted->steps});
  } else if (std::holds_alternative<Filtered>(outcome)) {
    ++nonhalting_;
  } else {
    ++exhausted_;
  }
}

void Aggregate::add_string(const std::string& s, const StringRecord& record) {
  if (record.count == 0) return;
  absorb(records_[s], record);
  halting_ += record.count;
}

void Aggregate::merge_from(const Aggregate& other) {
  if (!(meta_ == other.meta_)) throw std::invalid_argument("cannot merge aggregates with different meta");
  for (const auto& [s, record] : other.records_) absorb(records_[s], record);
  halting_ += other.halting_;
  nonhalting_ += other.nonhalting_;
  exhausted_ += other.exhausted_;
}

std::vector<std::pair<std::string, StringRecord>> Aggregate::sorted_records() const {
  std::vector<std::pair<std::string, StringRecord>> out(records_.begin(), records_.end());
  std::ranges::sort(out, [](const auto& a, const auto& b) { return shortlex_less(a.first, b.first); });
  return out;
}

void Aggregate::check_invariants() const {
  std::uint64_t sum = 0;
  const int max_n = 2 * meta_.states;
  for (const auto& [s, record] : records_) {
    if (s.empty()) throw std::logic_error("empty output string");
    if (record.count == 0) throw std::logic_error("zero-count record for " + s);
    if (record.min_n < 1 || record.min_n > max_n) throw std::logic_error("min_n out of range for " + s);
    if (record.min_t < 1 || record.min_t > meta_.bound) throw std::logic_error("min_t out of range for " + s);
    if (s.size() > record.min_t) throw std::logic_error("output longer than its runtime for " + s);
    sum += record.count;
  }
  if (sum != halting_) throw std::logic_error("halting tally differs from record counts");
}

std::optional<std::string> first_difference(const Aggregate& a, const Aggregate& b) {
  const auto tally = [](const char* name, std::uint64_t x, std::uint64_t y) -> std::optional<std::string> {
    if (x == y) return std::nullopt;
    return std::string(name) + ": " + std::to_string(x) + " vs " + std::to_string(y);
  };
  if (a.meta().states != b.meta().states) return "state count differs";
  if (a.meta().bound != b.meta().bound) return "bound differs";
  if (a.meta().blank != b.meta().blank) return "blank convention differs";
  if (auto d = tally("halting", a.halting(), b.halting())) return d;
  if (auto d = tally("nonhalting", a.nonhalting(), b.nonhalting())) return d;
  if (auto d = tally("exhausted", a.exhausted(), b.exhausted())) return d;
  const auto describe = [](const std::string& s, const StringRecord* r) {
    if (!r) return s + " absent";
    return s + " (count " + std::to_string(r->count) + ", min_n " + std::to_string(r->min_n) + ", min_t " +
           std::to_string(r->min_t) + ")";
  };
  const auto lookup = [](const Aggregate& x, const std::string& s) -> const StringRecord* {
    const auto it = x.records().find(s);
    return it == x.records().end() ? nullptr : &it->second;
  };
  // Report the shortlex-first differing string so diagnostics are stable.
  std::optional<std::string> first;
  for (const Aggregate* side : {&a, &b}) {
    for (const auto& [s, record] : side->records()) {
      const StringRecord* ra = lookup(a, s);
      const StringRecord* rb = lookup(b, s);
      if (ra && rb && *ra == *rb) continue;
      if (!first || shortlex_less(s, *first)) first = s;
    }
  }
  if (first) return "record " + describe(*first, lookup(a, *first)) + " vs " + describe(*first, lookup(b, *first));
  return std::nullopt;
}

bool operator==(const Aggregate& a, const Aggregate& b) {
  return a.meta_ == b.meta_ && a.halting_ == b.halting_ && a.nonhalting_ == b.nonhalting_ &&
         a.exhausted_ == b.exhausted_ && a.records_ == b.records_;
}

}  // namespace ctm
