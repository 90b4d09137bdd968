#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ctm/machine.h"

namespace ctm {

// Two-sided unbounded tape. Cells outside the allocated buffer read as blank;
// the buffer grows by doubling and re-centring when the head leaves it.
class Tape {
 public:
  explicit Tape(Symbol blank = 0);

  // Clears to an all-blank tape with only the origin visited.
  void reset(Symbol blank);

  Symbol blank() const { return blank_; }
  Symbol get(std::int64_t pos) const;
  void set(std::int64_t pos, Symbol value);

  // Marks a position visited; returns true if it had not been visited before.
  bool visit(std::int64_t pos);

  std::int64_t visited_min() const { return min_; }
  std::int64_t visited_max() const { return max_; }

  // Grows the buffer to cover [-reach, reach] and returns a pointer to the
  // origin cell, for loops that track the visited extent themselves and
  // report it back through set_visited.
  Symbol* window(std::int64_t reach);
  void set_visited(std::int64_t lo, std::int64_t hi) {
    min_ = lo;
    max_ = hi;
  }

 private:
  void ensure(std::int64_t pos);

  std::vector<Symbol> cells_;
  std::int64_t origin_ = 0;
  Symbol blank_ = 0;
  std::int64_t min_ = 0;
  std::int64_t max_ = 0;
};

enum class FilterKind { NoHaltTransition, Escapee, TwoCycle };
enum class Filters { On, Off };

const char* to_string(FilterKind kind);

struct Halted {
  std::string output;
  std::uint64_t steps = 0;
  int used = 0;
  friend bool operator==(const Halted&, const Halted&) = default;
};

struct Filtered {
  FilterKind which = FilterKind::NoHaltTransition;
  std::uint64_t steps = 0;
  friend bool operator==(const Filtered&, const Filtered&) = default;
};

struct Exhausted {
  std::uint64_t bound = 0;
  friend bool operator==(const Exhausted&, const Exhausted&) = default;
};

using RunOutcome = std::variant<Halted, Filtered, Exhausted>;

// What one executed transition looked like, recorded for the period-2 detector.
struct StepRecord {
  State state = 0;
  std::int64_t head = 0;
  Symbol read = 0;
  Symbol written = 0;
};

struct Configuration {
  State state = 1;
  std::int64_t head = 0;
  std::uint64_t steps = 0;
  std::uint32_t used = 0;  // bit per exercised table slot
  int escapee_run = 0;
  // [0] is the step two steps back, [1] the most recent one.
  std::array<StepRecord, 2> cycle_window{};
};

bool has_halt_transition(const TransitionTable& table);

// Consecutive first-visit cells exceed the state count: some state repeated on
// blank cells heading the same way, so the machine repeats forever.
inline bool escapee_check(const Configuration& config, int states) {
  return config.escapee_run > states;
}

// Same state and head as two steps earlier and both overwritten cells hold
// their old symbols again, so the whole configuration recurs.
inline bool two_cycle_check(const Configuration& config) {
  if (config.steps < 2) return false;
  const StepRecord& older = config.cycle_window[0];
  const StepRecord& newer = config.cycle_window[1];
  return config.state == older.state && config.head == older.head &&
         older.written == older.read && newer.written == newer.read;
}

std::string extract_output(const Tape& tape);

// Reusable per-thread simulator; keeps its tape buffer between runs.
class Simulator {
 public:
  RunOutcome run(const TransitionTable& table, Symbol blank, std::uint64_t bound,
                 Filters filters = Filters::On);

 private:
  template <bool kFiltering>
  RunOutcome execute(const TransitionTable& table, std::uint64_t bound);

  Tape tape_;
};

RunOutcome run(const TransitionTable& table, Symbol blank, std::uint64_t bound,
               Filters filters = Filters::On);

// Unfiltered bounded runs of many machines, interleaved in lockstep so their
// dependency chains overlap. Entry i is the step at which tables[i] halts on a
// blanks[i]-filled tape, or 0 if it is still running after `bound` steps.
std::vector<std::uint64_t> batch_halting_steps(std::span<const TransitionTable> tables,
                                               std::span<const Symbol> blanks, std::uint64_t bound);

}  // namespace ctm
