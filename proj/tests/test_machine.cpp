#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "reference.h"
#include "ctm/machine.h"

using namespace ctm;

TEST_CASE("instruction and space counts") {
  CHECK(instruction_count(1) == 6);
  CHECK(instruction_count(4) == 18);
  CHECK(instruction_count(5) == 22);
  CHECK(space_size(1) == 36);
  CHECK(space_size(2) == 10000);
  CHECK(space_size(3) == 7529536);
  CHECK(space_size(4) == 11019960576ull);
  CHECK(space_size(5) == 26559922791424ull);
  CHECK(reduced_size(1) == 0);
  CHECK(reduced_size(2) == 2000);
  CHECK(reduced_size(5) == 9658153742336ull);
  for (int n = 1; n <= 5; ++n) {
    CHECK(space_size(n) == ref::direct_count(n, false));
    CHECK(reduced_size(n) == ref::direct_count(n, true));
    // |Red| / |Full| = (n-1)/(2n+1)
    CHECK(reduced_size(n) * (2 * n + 1) == space_size(n) * (n - 1));
  }
  CHECK(reduced_size(5) * 11 == space_size(5) * 4);
}

TEST_CASE("unsupported state counts") {
  CHECK_THROWS_AS(space_size(0), std::invalid_argument);
  CHECK_THROWS_AS(space_size(6), std::invalid_argument);
  CHECK_THROWS_AS(decode(2, space_size(2)), std::out_of_range);
  CHECK_THROWS_AS(decode_reduced(2, reduced_size(2)), std::out_of_range);
  CHECK_THROWS_AS(decode_reduced(1, 0), std::invalid_argument);
  TransitionTable t(2);
  CHECK_THROWS(t.set(2, 0, Instruction::step(0, 1, 3)));
  CHECK_THROWS(t.set(3, 0, Instruction::halt(0)));
}

TEST_CASE("decode edge indices") {
  const TransitionTable zero = decode(2, 0);
  for (const auto& e : zero.entries()) CHECK(e == Instruction::halt(0));
  const TransitionTable top = decode(2, space_size(2) - 1);
  for (const auto& e : top.entries()) CHECK(e == Instruction::step(1, 1, 2));

  const TransitionTable r0 = decode_reduced(2, 0);
  CHECK(r0.at(1, 0) == Instruction::step(0, 1, 2));
  CHECK(r0.at(1, 1) == Instruction::halt(0));
  CHECK(r0.at(2, 0) == Instruction::halt(0));
  CHECK(r0.at(2, 1) == Instruction::halt(0));
}

TEST_CASE("digit alphabet") {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::tuple<int, int, int>> seen;
    for (std::uint64_t d = 0; d < instruction_count(n); ++d) {
      const Instruction ins = instruction_from_digit(n, d);
      CHECK(digit_from_instruction(n, ins) == d);
      seen.insert({ins.write, ins.move, ins.next});
    }
    CHECK(seen.size() == instruction_count(n));
  }
  CHECK(instruction_from_digit(2, 2) == Instruction::step(0, -1, 1));
  CHECK(instruction_from_digit(2, 5) == Instruction::step(1, 1, 1));
}

TEST_CASE("codec agrees with the literal decoder and round-trips") {
  for (int n = 1; n <= 2; ++n) {
    for (std::uint64_t v = 0; v < space_size(n); ++v) {
      const TransitionTable t = decode(n, v);
      REQUIRE(t == ref::decode(n, v));
      REQUIRE(encode(t) == MachineIndex{v, IndexSpace::Full, n});
    }
  }
  std::mt19937_64 rng(7);
  for (int n = 3; n <= 5; ++n) {
    std::uniform_int_distribution<std::uint64_t> pick(0, space_size(n) - 1);
    for (int i = 0; i < 100000 / (n - 2); ++i) {
      const std::uint64_t v = pick(rng);
      const TransitionTable t = decode(n, v);
      REQUIRE(t == ref::decode(n, v));
      REQUIRE(encode(t).value == v);
    }
  }
}

TEST_CASE("reduced image is exactly the right-moving fresh-state tables") {
  std::set<std::uint64_t> image;
  for (std::uint64_t r = 0; r < reduced_size(2); ++r) {
    const TransitionTable t = decode_reduced(2, r);
    REQUIRE(is_reduced_member(t));
    CHECK(encode_reduced(t) == MachineIndex{r, IndexSpace::Reduced, 2});
    CHECK(decode(MachineIndex{r, IndexSpace::Reduced, 2}) == t);
    image.insert(encode(t).value);
  }
  CHECK(image.size() == reduced_size(2));
  std::uint64_t members = 0;
  for (std::uint64_t v = 0; v < space_size(2); ++v) {
    const TransitionTable t = decode(2, v);
    const Instruction& first = t.at(1, 0);
    const bool expected = !first.is_halt() && first.move == 1 && first.next >= 2;
    CHECK(is_reduced_member(t) == expected);
    CHECK(image.contains(v) == expected);
    if (expected) ++members;
    else CHECK_THROWS_AS(encode_reduced(t), std::invalid_argument);
  }
  CHECK(members == reduced_size(2));

  std::mt19937_64 rng(11);
  for (int n = 3; n <= 5; ++n) {
    std::uniform_int_distribution<std::uint64_t> pick(0, reduced_size(n) - 1);
    for (int i = 0; i < 20000; ++i) {
      const std::uint64_t r = pick(rng);
      const TransitionTable t = decode_reduced(n, r);
      REQUIRE(is_reduced_member(t));
      REQUIRE(encode_reduced(t).value == r);
    }
  }
}

TEST_CASE("mirror and swap_symbols") {
  TransitionTable t(2);
  t.set(1, 0, Instruction::step(0, 1, 2));
  CHECK(mirror(t).at(1, 0) == Instruction::step(0, -1, 2));
  TransitionTable h(1);
  h.set(1, 0, Instruction::halt(0));
  h.set(1, 1, Instruction::halt(1));
  CHECK(swap_symbols(h).at(1, 0) == Instruction::halt(0));
  CHECK(swap_symbols(h).at(1, 1) == Instruction::halt(1));

  for (const auto& e : swap_symbols(TransitionTable(2)).entries()) CHECK(e == Instruction::halt(1));

  TransitionTable single(1);
  single.set(1, 0, Instruction::halt(0));
  single.set(1, 1, Instruction::step(0, 1, 1));
  const TransitionTable s = swap_symbols(single);
  CHECK(s.at(1, 1) == Instruction::halt(1));
  CHECK(s.at(1, 0) == Instruction::step(1, 1, 1));

  for (std::uint64_t v = 0; v < space_size(2); ++v) {
    const TransitionTable x = decode(2, v);
    REQUIRE(mirror(mirror(x)) == x);
    REQUIRE(swap_symbols(swap_symbols(x)) == x);
    REQUIRE(mirror(swap_symbols(x)) == swap_symbols(mirror(x)));
  }
}

TEST_CASE("to_string") {
  TransitionTable t(2);
  t.set(1, 0, Instruction::step(1, 1, 2));
  t.set(2, 1, Instruction::halt(1));
  CHECK(t.to_string() == "1R2 H0 | H0 H1");
}
