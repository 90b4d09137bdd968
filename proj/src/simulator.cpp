#include "ctm/simulator.h"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace ctm {

namespace {
constexpr std::size_t kInitialTapeCells = 256;
}

Tape::Tape(Symbol blank) : cells_(kInitialTapeCells, blank), origin_(kInitialTapeCells / 2), blank_(blank) {}

void Tape::reset(Symbol blank) {
  if (blank != blank_) {
    std::fill(cells_.begin(), cells_.end(), blank);
    blank_ = blank;
  } else {
    std::fill(cells_.begin() + (origin_ + min_), cells_.begin() + (origin_ + max_ + 1), blank);
  }
  min_ = max_ = 0;
}

void Tape::ensure(std::int64_t pos) {
  const auto size = static_cast<std::int64_t>(cells_.size());
  if (pos + origin_ >= 0 && pos + origin_ < size) return;
  std::int64_t new_size = size;
  while (pos + origin_ + (new_size - size) / 2 < 0 ||
         pos + origin_ + (new_size - size) / 2 >= new_size) {
    new_size *= 2;
  }
  const std::int64_t shift = (new_size - size) / 2;
  std::vector<Symbol> grown(static_cast<std::size_t>(new_size), blank_);
  std::copy(cells_.begin(), cells_.end(), grown.begin() + shift);
  cells_ = std::move(grown);
  origin_ += shift;
}

Symbol* Tape::window(std::int64_t reach) {
  ensure(-reach);
  ensure(reach);
  return cells_.data() + origin_;
}

Symbol Tape::get(std::int64_t pos) const {
  const std::int64_t at = pos + origin_;
  if (at < 0 || at >= static_cast<std::int64_t>(cells_.size())) return blank_;
  return cells_[static_cast<std::size_t>(at)];
}

void Tape::set(std::int64_t pos, Symbol value) {
  ensure(pos);
  cells_[static_cast<std::size_t>(pos + origin_)] = value;
}

bool Tape::visit(std::int64_t pos) {
  if (pos < min_) {
    min_ = pos;
    ensure(pos);
    return true;
  }
  if (pos > max_) {
    max_ = pos;
    ensure(pos);
    return true;
  }
  return false;
}

const char* to_string(FilterKind kind) {
  switch (kind) {
    case FilterKind::NoHaltTransition:
      return "no-halt-transition";
    case FilterKind::Escapee:
      return "escapee";
    case FilterKind::TwoCycle:
      return "two-cycle";
  }
  return "unknown";
}

bool has_halt_transition(const TransitionTable& table) {
  return std::ranges::any_of(table.entries(), [](const Instruction& i) { return i.is_halt(); });
}

std::string extract_output(const Tape& tape) {
  std::string out;
  out.reserve(static_cast<std::size_t>(tape.visited_max() - tape.visited_min() + 1));
  for (std::int64_t pos = tape.visited_min(); pos <= tape.visited_max(); ++pos) {
    out += static_cast<char>('0' + tape.get(pos));
  }
  return out;
}

namespace {

// Table entry re-encoded for the inner loop: `base` is the slot offset of the
// next state (2 * (next - 1)), or kHaltBase for halting entries.
struct PackedEntry {
  std::int32_t move;
  std::uint32_t write;
  std::uint32_t base;
};
constexpr std::uint32_t kHaltBase = 0xffffffffu;

}  // namespace

template <bool kFiltering>
RunOutcome Simulator::execute(const TransitionTable& table, std::uint64_t bound) {
  const int states = table.states();
  std::array<PackedEntry, 2 * kMaxStates> packed{};
  for (int slot = 0; slot < table.entry_count(); ++slot) {
    const Instruction& ins = table.entries()[static_cast<std::size_t>(slot)];
    packed[static_cast<std::size_t>(slot)] = {ins.move, ins.write,
                                              ins.is_halt() ? kHaltBase : 2u * (ins.next - 1u)};
  }
  // A bounded run never moves further than `bound` cells from the origin.
  Symbol* const cells = tape_.window(static_cast<std::int64_t>(bound) + 1);

  Configuration config;
  std::uint32_t base = 0;
  std::int64_t head = 0;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::uint32_t used = 0;
  std::uint64_t steps = 0;
  const auto finish = [&] {
    tape_.set_visited(lo, hi);
    config.state = static_cast<State>(base / 2 + 1);
    config.head = head;
    config.steps = steps;
    config.used = used;
  };

  while (steps < bound) {
    const Symbol read = cells[head];
    const std::uint32_t slot = base + read;
    const PackedEntry entry = packed[slot];
    used |= 1u << slot;
    cells[head] = static_cast<Symbol>(entry.write);
    ++steps;
    if (entry.base == kHaltBase) {
      finish();
      return Halted{extract_output(tape_), steps, std::popcount(used)};
    }
    const std::int64_t from = head;
    const std::uint32_t from_base = base;
    base = entry.base;
    head += entry.move;
    bool fresh = false;
    if (head < lo) {
      lo = head;
      fresh = true;
    } else if (head > hi) {
      hi = head;
      fresh = true;
    }
    if constexpr (kFiltering) {
      config.cycle_window[0] = config.cycle_window[1];
      config.cycle_window[1] = {static_cast<State>(from_base / 2 + 1), from, read,
                                static_cast<Symbol>(entry.write)};
      config.state = static_cast<State>(base / 2 + 1);
      config.head = head;
      config.steps = steps;
      if (two_cycle_check(config)) {
        finish();
        return Filtered{FilterKind::TwoCycle, steps};
      }
      config.escapee_run = fresh ? config.escapee_run + 1 : 0;
      if (escapee_check(config, states)) {
        finish();
        return Filtered{FilterKind::Escapee, steps};
      }
    }
  }
  finish();
  return Exhausted{bound};
}

RunOutcome Simulator::run(const TransitionTable& table, Symbol blank, std::uint64_t bound,
                          Filters filters) {
  if (bound < 1) throw std::invalid_argument("step bound must be at least 1");
  tape_.reset(blank);
  if (filters == Filters::Off) return execute<false>(table, bound);
  if (!has_halt_transition(table)) return Filtered{FilterKind::NoHaltTransition, 0};
  return execute<true>(table, bound);
}

std::vector<std::uint64_t> batch_halting_steps(std::span<const TransitionTable> tables,
                                               std::span<const Symbol> blanks, std::uint64_t bound) {
  if (tables.size() != blanks.size()) throw std::invalid_argument("tables and blanks differ in length");
  if (bound < 1) throw std::invalid_argument("step bound must be at least 1");
  constexpr std::size_t kLanes = 8;
  constexpr int kBurst = 64;
  const std::size_t width = 2 * static_cast<std::size_t>(bound) + 3;

  std::vector<std::uint64_t> result(tables.size(), 0);
  std::vector<Symbol> tape(kLanes * width);
  std::array<std::array<PackedEntry, 2 * kMaxStates>, kLanes> packed{};
  std::array<Symbol*, kLanes> origin{};
  std::array<std::int64_t, kLanes> head{};
  std::array<std::uint32_t, kLanes> base{};
  std::array<std::uint64_t, kLanes> steps{};
  std::array<std::uint64_t, kLanes> limit{};  // steps < limit while running
  std::array<std::size_t, kLanes> job{};
  std::array<bool, kLanes> busy{};

  std::size_t next_job = 0;
  const auto load = [&](std::size_t lane) {
    busy[lane] = false;
    limit[lane] = 0;
    if (next_job == tables.size()) return;
    const TransitionTable& table = tables[next_job];
    for (int slot = 0; slot < table.entry_count(); ++slot) {
      const Instruction& ins = table.entries()[static_cast<std::size_t>(slot)];
      packed[lane][static_cast<std::size_t>(slot)] = {ins.move, ins.write,
                                                      ins.is_halt() ? kHaltBase : 2u * (ins.next - 1u)};
    }
    Symbol* lane_tape = tape.data() + lane * width;
    std::fill(lane_tape, lane_tape + width, blanks[next_job]);
    origin[lane] = lane_tape + bound + 1;
    head[lane] = 0;
    base[lane] = 0;
    steps[lane] = 0;
    limit[lane] = bound;
    job[lane] = next_job++;
    busy[lane] = true;
  };
  for (std::size_t lane = 0; lane < kLanes; ++lane) load(lane);

  while (true) {
    bool any = false;
    for (std::size_t lane = 0; lane < kLanes; ++lane) any = any || busy[lane];
    if (!any) break;
    for (int rep = 0; rep < kBurst; ++rep) {
      for (std::size_t lane = 0; lane < kLanes; ++lane) {
        if (steps[lane] >= limit[lane]) continue;
        Symbol& cell = origin[lane][head[lane]];
        const PackedEntry entry = packed[lane][base[lane] + cell];
        cell = static_cast<Symbol>(entry.write);
        ++steps[lane];
        if (entry.base == kHaltBase) {
          result[job[lane]] = steps[lane];
          limit[lane] = 0;
        } else {
          base[lane] = entry.base;
          head[lane] += entry.move;
        }
      }
    }
    for (std::size_t lane = 0; lane < kLanes; ++lane) {
      if (busy[lane] && steps[lane] >= limit[lane]) load(lane);
    }
  }
  return result;
}

RunOutcome run(const TransitionTable& table, Symbol blank, std::uint64_t bound, Filters filters) {
  Simulator simulator;
  return simulator.run(table, blank, bound, filters);
}

}  // namespace ctm
