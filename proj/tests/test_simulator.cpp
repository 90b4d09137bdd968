#include <random>
#include <stdexcept>

#include "doctest.h"
#include "reference.h"
#include "ctm/simulator.h"

using namespace ctm;

namespace {

TransitionTable table(int n, std::initializer_list<std::tuple<int, int, Instruction>> entries) {
  TransitionTable t(n);
  for (const auto& [state, sym, ins] : entries) t.set(state, static_cast<Symbol>(sym), ins);
  return t;
}

std::string complement(std::string s) {
  for (char& c : s) c = c == '0' ? '1' : '0';
  return s;
}

}  // namespace

TEST_CASE("tape") {
  Tape tape(1);
  CHECK(tape.get(-1000) == 1);
  CHECK(tape.get(12345) == 1);
  tape.set(-300, 0);
  tape.set(500, 0);
  CHECK(tape.get(-300) == 0);
  CHECK(tape.get(500) == 0);
  CHECK(tape.get(499) == 1);
  CHECK(tape.visit(3));
  CHECK_FALSE(tape.visit(3));
  CHECK(tape.visited_max() == 3);
  CHECK(tape.visited_min() == 0);
  tape.reset(0);
  CHECK(tape.get(-300) == 0);
  CHECK(tape.get(0) == 0);
  CHECK(tape.visited_max() == 0);
  tape.set(0, 1);
  CHECK(extract_output(tape) == "1");
}

TEST_CASE("has_halt_transition") {
  TransitionTable all_step(2);
  for (int s = 1; s <= 2; ++s)
    for (int k = 0; k < 2; ++k) all_step.set(s, static_cast<Symbol>(k), Instruction::step(0, 1, 1));
  CHECK_FALSE(has_halt_transition(all_step));
  all_step.set(2, 1, Instruction::halt(0));
  CHECK(has_halt_transition(all_step));

  int with_halt = 0;
  for (std::uint64_t v = 0; v < space_size(2); ++v) with_halt += has_halt_transition(decode(2, v));
  CHECK(with_halt == 10000 - 4096);
}

TEST_CASE("hand-simulated machines") {
  const auto one = table(2, {{1, 0, Instruction::halt(1)}});
  CHECK(run(one, 0, 100) == RunOutcome{Halted{"1", 1, 1}});

  const auto zero = table(2, {{1, 0, Instruction::halt(0)}});
  CHECK(run(zero, 0, 100) == RunOutcome{Halted{"0", 1, 1}});

  const auto ones = table(2, {{1, 0, Instruction::step(1, 1, 2)}, {2, 0, Instruction::halt(1)}});
  CHECK(run(ones, 0, 100) == RunOutcome{Halted{"11", 2, 2}});
  CHECK(run(ones, 0, 2) == RunOutcome{Halted{"11", 2, 2}});
  CHECK(run(ones, 0, 1) == RunOutcome{Exhausted{1}});

  auto runner = table(2, {{1, 0, Instruction::step(0, 1, 1)}});
  const RunOutcome r = run(runner, 0, 100);
  REQUIRE(std::holds_alternative<Filtered>(r));
  CHECK(std::get<Filtered>(r).which == FilterKind::Escapee);
  CHECK(std::get<Filtered>(r).steps == 3);

  const auto pingpong = table(2, {{1, 0, Instruction::step(0, 1, 2)}, {2, 0, Instruction::step(0, -1, 1)}});
  CHECK(run(pingpong, 0, 100) == RunOutcome{Filtered{FilterKind::TwoCycle, 2}});
  CHECK(std::holds_alternative<Exhausted>(run(pingpong, 0, 100, Filters::Off)));

  // period 4 inside two cells: neither detector applies
  const auto period4 = table(4, {{1, 0, Instruction::step(0, 1, 2)},
                                 {2, 0, Instruction::step(0, -1, 3)},
                                 {3, 0, Instruction::step(0, 1, 4)},
                                 {4, 0, Instruction::step(0, -1, 1)}});
  CHECK(run(period4, 0, 1000) == RunOutcome{Exhausted{1000}});

  CHECK_THROWS_AS(run(one, 0, 0), std::invalid_argument);
}

TEST_CASE("escapee fires once the fresh run exceeds n") {
  for (int n = 1; n <= 5; ++n) {
    TransitionTable t(n);
    t.set(1, 0, Instruction::step(0, 1, 1));
    CHECK(run(t, 0, 1000) == RunOutcome{Filtered{FilterKind::Escapee, static_cast<std::uint64_t>(n + 1)}});
  }
  // a 1-state left runner on a 1-filled tape
  TransitionTable left(1);
  left.set(1, 1, Instruction::step(1, -1, 1));
  left.set(1, 0, Instruction::halt(0));
  CHECK(run(left, 1, 1000) == RunOutcome{Filtered{FilterKind::Escapee, 2}});
  CHECK(run(left, 1, 1) == RunOutcome{Exhausted{1}});

  Configuration c;
  c.escapee_run = 3;
  CHECK_FALSE(escapee_check(c, 3));
  c.escapee_run = 4;
  CHECK(escapee_check(c, 3));
}

TEST_CASE("two-cycle check on hand-built windows") {
  Configuration c;
  c.steps = 2;
  c.state = 1;
  c.head = 0;
  c.cycle_window[0] = {1, 0, 0, 0};
  c.cycle_window[1] = {2, 1, 0, 0};
  CHECK(two_cycle_check(c));
  c.cycle_window[1].written = 1;
  CHECK_FALSE(two_cycle_check(c));
  c.cycle_window[1].written = 0;
  c.state = 2;
  CHECK_FALSE(two_cycle_check(c));
  c.state = 1;
  c.steps = 1;
  CHECK_FALSE(two_cycle_check(c));
}

TEST_CASE("every (2,2) run matches the reference simulator") {
  Simulator sim;
  for (std::uint64_t v = 0; v < space_size(2); ++v) {
    const TransitionTable t = decode(2, v);
    for (int blank = 0; blank <= 1; ++blank) {
      for (bool filt : {true, false}) {
        const RunOutcome o = sim.run(t, static_cast<Symbol>(blank), 200, filt ? Filters::On : Filters::Off);
        const ref::Result r = ref::run(t, blank, 200, filt);
        INFO("machine " << v << " blank " << blank << " filters " << filt);
        REQUIRE(ref::same(o, r));
      }
    }
  }
}

TEST_CASE("random (3,2) and (4,2) runs match the reference simulator") {
  std::mt19937_64 rng(3);
  Simulator sim;
  for (int n = 3; n <= 4; ++n) {
    std::uniform_int_distribution<std::uint64_t> pick(0, space_size(n) - 1);
    for (int i = 0; i < 5000; ++i) {
      const std::uint64_t v = pick(rng);
      const TransitionTable t = decode(n, v);
      const int blank = i % 2;
      const RunOutcome o = sim.run(t, static_cast<Symbol>(blank), 150, Filters::On);
      INFO("n " << n << " machine " << v);
      REQUIRE(ref::same(o, ref::run(t, blank, 150, true)));
      REQUIRE(ref::same(sim.run(t, static_cast<Symbol>(blank), 150, Filters::Off), ref::run(t, blank, 150, false)));
    }
  }
}

TEST_CASE("halted outcomes respect their bounds") {
  Simulator sim;
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 5; ++n) {
    std::uniform_int_distribution<std::uint64_t> pick(0, space_size(n) - 1);
    for (int i = 0; i < 20000; ++i) {
      const std::uint64_t v = n == 2 ? static_cast<std::uint64_t>(i % 10000) : pick(rng);
      const RunOutcome o = sim.run(decode(n, v), static_cast<Symbol>(i & 1), 300);
      if (const auto* h = std::get_if<Halted>(&o)) {
        REQUIRE(h->output.size() >= 1);
        REQUIRE(h->output.size() <= h->steps);
        REQUIRE(h->steps <= 300);
        REQUIRE(h->used >= 1);
        REQUIRE(h->used <= 2 * n);
        REQUIRE(h->output.find_first_not_of("01") == std::string::npos);
      }
    }
  }
}

TEST_CASE("mirror and complement symmetry over (2,2)") {
  Simulator sim;
  for (std::uint64_t v = 0; v < space_size(2); ++v) {
    const TransitionTable t = decode(2, v);
    for (Filters f : {Filters::On, Filters::Off}) {
      const RunOutcome a = sim.run(t, 0, 200, f);
      const RunOutcome m = sim.run(mirror(t), 0, 200, f);
      REQUIRE(a.index() == m.index());
      if (const auto* h = std::get_if<Halted>(&a)) {
        const auto& hm = std::get<Halted>(m);
        REQUIRE(hm.output == std::string(h->output.rbegin(), h->output.rend()));
        REQUIRE(hm.steps == h->steps);
        REQUIRE(hm.used == h->used);
      }
      const RunOutcome b = sim.run(t, 1, 200, f);
      const RunOutcome s = sim.run(swap_symbols(t), 0, 200, f);
      REQUIRE(b.index() == s.index());
      if (const auto* h = std::get_if<Halted>(&b)) {
        const auto& hs = std::get<Halted>(s);
        REQUIRE(hs.output == complement(h->output));
        REQUIRE(hs.steps == h->steps);
        REQUIRE(hs.used == h->used);
      }
    }
  }
}

TEST_CASE("filtered (2,2) machines never halt when run on") {
  Simulator sim;
  int flagged = 0;
  for (std::uint64_t v = 0; v < space_size(2); ++v) {
    const TransitionTable t = decode(2, v);
    for (Symbol blank : {Symbol{0}, Symbol{1}}) {
      if (!std::holds_alternative<Filtered>(sim.run(t, blank, 10000))) continue;
      ++flagged;
      REQUIRE_FALSE(std::holds_alternative<Halted>(sim.run(t, blank, 10000, Filters::Off)));
    }
  }
  CHECK(flagged > 0);
}

TEST_CASE("batch kernel agrees with single runs") {
  std::mt19937_64 rng(9);
  for (int n = 1; n <= 5; ++n) {
    std::uniform_int_distribution<std::uint64_t> pick(0, space_size(n) - 1);
    std::vector<TransitionTable> tables;
    std::vector<Symbol> blanks;
    for (int i = 0; i < 1237; ++i) {
      tables.push_back(decode(n, pick(rng)));
      blanks.push_back(static_cast<Symbol>(rng() & 1));
    }
    const auto steps = batch_halting_steps(tables, blanks, 700);
    REQUIRE(steps.size() == tables.size());
    Simulator sim;
    for (std::size_t i = 0; i < tables.size(); ++i) {
      const RunOutcome o = sim.run(tables[i], blanks[i], 700, Filters::Off);
      const auto* h = std::get_if<Halted>(&o);
      REQUIRE(steps[i] == (h ? h->steps : 0));
    }
  }
  CHECK(batch_halting_steps({}, {}, 10).empty());
}

TEST_CASE("runs are deterministic and independent of simulator reuse") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::uint64_t> pick(0, space_size(3) - 1);
  Simulator reused;
  for (int i = 0; i < 2000; ++i) {
    const TransitionTable t = decode(3, pick(rng));
    Simulator fresh;
    REQUIRE(reused.run(t, 1, 400) == fresh.run(t, 1, 400));
    REQUIRE(reused.run(t, 1, 400) == run(t, 1, 400));
  }
}
