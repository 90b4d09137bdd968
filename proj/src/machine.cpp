#include "ctm/machine.h"

#include <stdexcept>

namespace ctm {

namespace {

void require_supported(int states) {
  if (states < 1 || states > kMaxStates) {
    throw std::invalid_argument("state count " + std::to_string(states) +
                                " outside supported range 1.." + std::to_string(kMaxStates));
  }
}

std::uint64_t power(std::uint64_t base, int exponent) {
  std::uint64_t result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace

TransitionTable::TransitionTable(int states) : states_(states) {
  require_supported(states);
  entries_.fill(Instruction::halt(0));
}

void TransitionTable::set(int state, Symbol read, Instruction instruction) {
  if (state < 1 || state > states_ || read > 1) {
    throw std::out_of_range("transition table entry out of range");
  }
  if (instruction.write > 1) throw std::invalid_argument("written symbol must be 0 or 1");
  if (instruction.is_halt()) {
    if (instruction.move != 0) throw std::invalid_argument("halting instruction cannot move");
  } else {
    if (instruction.move != -1 && instruction.move != 1) {
      throw std::invalid_argument("move must be -1 or +1");
    }
    if (instruction.next > states_) throw std::invalid_argument("next state exceeds state count");
  }
  entries_[slot(state, read)] = instruction;
}

std::string TransitionTable::to_string() const {
  std::string out;
  for (int state = 1; state <= states_; ++state) {
    if (state > 1) out += " | ";
    for (Symbol read = 0; read <= 1; ++read) {
      if (read == 1) out += ' ';
      const Instruction& ins = at(state, read);
      if (ins.is_halt()) {
        out += 'H';
        out += static_cast<char>('0' + ins.write);
      } else {
        out += static_cast<char>('0' + ins.write);
        out += ins.move < 0 ? 'L' : 'R';
        out += std::to_string(ins.next);
      }
    }
  }
  return out;
}

bool operator==(const TransitionTable& a, const TransitionTable& b) {
  if (a.states_ != b.states_) return false;
  for (int i = 0; i < a.entry_count(); ++i) {
    if (a.entries_[i] != b.entries_[i]) return false;
  }
  return true;
}

std::uint64_t instruction_count(int states) {
  return 4 * static_cast<std::uint64_t>(states) + 2;
}

std::uint64_t space_size(int states) {
  require_supported(states);
  return power(instruction_count(states), 2 * states);
}

std::uint64_t reduced_size(int states) {
  require_supported(states);
  return 2 * static_cast<std::uint64_t>(states - 1) *
         power(instruction_count(states), 2 * states - 1);
}

Instruction instruction_from_digit(int states, std::uint64_t digit) {
  if (digit >= instruction_count(states)) throw std::out_of_range("instruction digit out of range");
  if (digit < 2) return Instruction::halt(static_cast<Symbol>(digit));
  const std::uint64_t j = digit - 2;
  return Instruction::step(static_cast<Symbol>(j % 2), (j / 2) % 2 == 0 ? -1 : 1,
                           static_cast<int>(1 + j / 4));
}

std::uint64_t digit_from_instruction(int states, const Instruction& ins) {
  if (ins.is_halt()) return ins.write;
  const std::uint64_t move_bit = ins.move > 0 ? 1 : 0;
  const std::uint64_t digit = 2 + ins.write + 2 * move_bit + 4 * (ins.next - 1u);
  if (digit >= instruction_count(states)) throw std::out_of_range("instruction not in alphabet");
  return digit;
}

TransitionTable decode(int states, std::uint64_t value) {
  if (value >= space_size(states)) throw std::out_of_range("machine index out of range");
  const std::uint64_t base = instruction_count(states);
  TransitionTable table(states);
  for (int slot = 0; slot < 2 * states; ++slot) {
    table.set(slot / 2 + 1, static_cast<Symbol>(slot % 2), instruction_from_digit(states, value % base));
    value /= base;
  }
  return table;
}

TransitionTable decode_reduced(int states, std::uint64_t value) {
  if (states < 2) throw std::invalid_argument("reduced space requires at least 2 states");
  if (value >= reduced_size(states)) throw std::out_of_range("reduced machine index out of range");
  const std::uint64_t first_radix = 2 * static_cast<std::uint64_t>(states - 1);
  const std::uint64_t first = value % first_radix;
  value /= first_radix;
  TransitionTable table(states);
  table.set(1, 0, Instruction::step(static_cast<Symbol>(first % 2), 1, static_cast<int>(2 + first / 2)));
  const std::uint64_t base = instruction_count(states);
  for (int slot = 1; slot < 2 * states; ++slot) {
    table.set(slot / 2 + 1, static_cast<Symbol>(slot % 2), instruction_from_digit(states, value % base));
    value /= base;
  }
  return table;
}

TransitionTable decode(const MachineIndex& index) {
  return index.space == IndexSpace::Full ? decode(index.states, index.value)
                                         : decode_reduced(index.states, index.value);
}

MachineIndex encode(const TransitionTable& table) {
  const int states = table.states();
  const std::uint64_t base = instruction_count(states);
  std::uint64_t value = 0;
  for (int slot = 2 * states - 1; slot >= 0; --slot) {
    value = value * base + digit_from_instruction(states, table.entries()[slot]);
  }
  return {value, IndexSpace::Full, states};
}

bool is_reduced_member(const TransitionTable& table) {
  const Instruction& first = table.at(1, 0);
  return !first.is_halt() && first.move == 1 && first.next >= 2;
}

MachineIndex encode_reduced(const TransitionTable& table) {
  if (!is_reduced_member(table)) throw std::invalid_argument("table is not in the reduced space");
  const int states = table.states();
  const std::uint64_t base = instruction_count(states);
  std::uint64_t rest = 0;
  for (int slot = 2 * states - 1; slot >= 1; --slot) {
    rest = rest * base + digit_from_instruction(states, table.entries()[slot]);
  }
  const Instruction& first = table.at(1, 0);
  const std::uint64_t first_digit = first.write + 2 * (first.next - 2u);
  return {first_digit + 2 * static_cast<std::uint64_t>(states - 1) * rest, IndexSpace::Reduced, states};
}

TransitionTable mirror(const TransitionTable& table) {
  TransitionTable out = table;
  for (int state = 1; state <= table.states(); ++state) {
    for (Symbol read = 0; read <= 1; ++read) {
      Instruction ins = table.at(state, read);
      ins.move = static_cast<std::int8_t>(-ins.move);
      out.set(state, read, ins);
    }
  }
  return out;
}

TransitionTable swap_symbols(const TransitionTable& table) {
  TransitionTable out(table.states());
  for (int state = 1; state <= table.states(); ++state) {
    for (Symbol read = 0; read <= 1; ++read) {
      Instruction ins = table.at(state, read);
      ins.write = static_cast<Symbol>(1 - ins.write);
      out.set(state, static_cast<Symbol>(1 - read), ins);
    }
  }
  return out;
}

}  // namespace ctm
