#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

namespace ctm {

using Symbol = std::uint8_t;
using State = std::uint8_t;

inline constexpr int kMaxStates = 5;
inline constexpr State kHaltState = 0;

// One entry of a transition table. Halting instructions have move 0 and next 0.
struct Instruction {
  Symbol write = 0;
  std::int8_t move = 0;
  State next = kHaltState;

  static constexpr Instruction halt(Symbol write) { return {write, 0, kHaltState}; }
  static constexpr Instruction step(Symbol write, int move, int next) {
    return {write, static_cast<std::int8_t>(move), static_cast<State>(next)};
  }

  constexpr bool is_halt() const { return next == kHaltState; }
  friend constexpr bool operator==(const Instruction&, const Instruction&) = default;
};

// Total map (state in 1..n, symbol in {0,1}) -> Instruction.
// Entry (state, symbol) is stored at slot (state - 1) * 2 + symbol.
class TransitionTable {
 public:
  // All entries start as Halt{0}.
  explicit TransitionTable(int states);

  int states() const { return states_; }
  int entry_count() const { return 2 * states_; }

  const Instruction& at(int state, Symbol read) const { return entries_[slot(state, read)]; }
  void set(int state, Symbol read, Instruction instruction);

  std::span<const Instruction> entries() const {
    return {entries_.data(), static_cast<std::size_t>(entry_count())};
  }

  static constexpr int slot(int state, Symbol read) { return (state - 1) * 2 + read; }

  // Compact form such as "1R2 H1 | 0L1 1R2"; halting entries print as H<write>.
  std::string to_string() const;

  friend bool operator==(const TransitionTable& a, const TransitionTable& b);

 private:
  int states_;
  std::array<Instruction, 2 * kMaxStates> entries_{};
};

enum class IndexSpace { Full, Reduced };

struct MachineIndex {
  std::uint64_t value = 0;
  IndexSpace space = IndexSpace::Full;
  int states = 1;

  friend bool operator==(const MachineIndex&, const MachineIndex&) = default;
};

// Number of distinct instructions available to an n-state machine: 4n + 2.
std::uint64_t instruction_count(int states);

// (4n + 2)^(2n); n must be in [1, kMaxStates].
std::uint64_t space_size(int states);

// 2(n - 1)(4n + 2)^(2n - 1): machines whose first transition moves right
// into a state other than 1. Zero for n = 1.
std::uint64_t reduced_size(int states);

// Canonical instruction alphabet: 0 -> Halt{0}, 1 -> Halt{1}, and for
// j = digit - 2: write = j % 2, move = (j / 2) % 2 ? +1 : -1, next = 1 + j / 4.
Instruction instruction_from_digit(int states, std::uint64_t digit);
std::uint64_t digit_from_instruction(int states, const Instruction& instruction);

TransitionTable decode(int states, std::uint64_t value);
TransitionTable decode_reduced(int states, std::uint64_t value);
TransitionTable decode(const MachineIndex& index);

MachineIndex encode(const TransitionTable& table);
// Throws std::invalid_argument if the table is not in the reduced space.
MachineIndex encode_reduced(const TransitionTable& table);

// True iff entry (1,0) is Step{k, +1, s'} with s' >= 2.
bool is_reduced_member(const TransitionTable& table);

// Negates every movement direction.
TransitionTable mirror(const TransitionTable& table);

// Exchanges the roles of 0 and 1 in both the read keys and the written symbols.
TransitionTable swap_symbols(const TransitionTable& table);

}  // namespace ctm
