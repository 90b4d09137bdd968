#include <cmath>
#include <set>

#include "doctest.h"
#include "ctm/enumeration.h"
#include "ctm/measures.h"
#include "ctm/runner.h"

using namespace ctm;

namespace {

const Distribution& d32() {
  static const Distribution d =
      build_distribution(complete(orchestrate(make_plan(3, IndexSpace::Reduced, 0, default_bound(3))).aggregate));
  return d;
}

const Distribution& d22() {
  static const Distribution d = build_distribution(full_oracle(2, 200));
  return d;
}

}  // namespace

TEST_CASE("km of simple probabilities") {
  Aggregate half({1, 10, AggregateMode::FullOracle, BlankConvention::Both});
  half.add_string("0", {1, 1, 1});
  half.add_string("1", {1, 1, 1});
  CHECK(km(build_distribution(half), "0") == 1.0);

  Aggregate quarter({1, 10, AggregateMode::FullOracle, BlankConvention::Both});
  quarter.add_string("0", {3, 1, 1});
  quarter.add_string("1", {1, 1, 1});
  quarter.add_nonhalting(100);
  const Distribution d = build_distribution(quarter);
  CHECK(km(d, "1") == 2.0);
  CHECK(d.at("1").probability.numerator == 1);
  CHECK(d.at("1").probability.denominator == 4);
  CHECK(d.halting_total() == 4);
}

TEST_CASE("build_distribution preconditions") {
  CHECK_THROWS(build_distribution(Aggregate({2, 10, AggregateMode::Completed, BlankConvention::Both})));
  Aggregate raw({2, 10, AggregateMode::RawReduced, BlankConvention::Zero});
  raw.add_string("0", {1, 1, 1});
  CHECK_THROWS(build_distribution(raw));
}

TEST_CASE("lookups") {
  const Distribution& d = d22();
  CHECK(d.contains("0"));
  CHECK_THROWS_AS(d.at("0000000000000"), NotObserved);
  CHECK_THROWS_AS(d.at(""), std::invalid_argument);
  CHECK_THROWS_AS(d.at("012"), std::invalid_argument);
  CHECK(ld_estimate(d, "0") == 1);
  CHECK(ld_estimate(d, "11") == 2);
  CHECK(km(d, "0") == doctest::Approx(std::log2(double(d.halting_total()) / double(d.at("0").count))).epsilon(1e-15));
}

TEST_CASE("D(2,2) and D(3,2) properties") {
  for (const Distribution* d : {&d22(), &d32()}) {
    const int n = d->states();
    INFO("n " << n);
    CHECK(d->sums_to_one());
    std::uint64_t total = 0;
    double float_sum = 0;
    for (const auto& e : d->entries()) {
      total += e.count;
      float_sum += e.probability.value();
    }
    CHECK(total == d->halting_total());
    CHECK(std::abs(float_sum - 1.0) <= 1e-12);

    const auto& zero = d->at("0");
    CHECK(zero.count == d->at("1").count);
    CHECK(zero.min_n == 1);
    CHECK(zero.ld == 1);
    std::set<std::string> group_one;
    for (const auto& e : d->entries()) {
      const std::string rev(e.string.rbegin(), e.string.rend());
      std::string comp = e.string;
      for (char& c : comp) c = c == '0' ? '1' : '0';
      REQUIRE(d->at(rev).count == e.count);
      REQUIRE(d->at(comp).count == e.count);
      REQUIRE(e.length <= e.ld);
      if (e.string.size() > 1) REQUIRE(e.count < zero.count);
      if (e.count < d->halting_total()) REQUIRE(e.km > 0);
      if (e.length <= static_cast<std::size_t>(n)) REQUIRE(e.min_n == static_cast<int>(e.length));
      if (e.min_n == 1) group_one.insert(e.string);
    }
    CHECK(group_one == std::set<std::string>{"0", "1"});
    // all 2^i strings of length i <= n appear
    for (int i = 1; i <= n; ++i) {
      for (int bits = 0; bits < (1 << i); ++bits) {
        std::string s;
        for (int j = i - 1; j >= 0; --j) s += static_cast<char>('0' + ((bits >> j) & 1));
        CHECK(d->contains(s));
      }
    }
    // km strictly decreasing in count
    for (const auto& a : d->entries())
      for (const auto& b : d->entries())
        if (a.count < b.count) REQUIRE(a.km > b.km);
  }
}

TEST_CASE("instruction groups") {
  const auto rows = instruction_group_table(d32());
  REQUIRE(rows.size() == 6);
  std::size_t strings = 0;
  double last = -1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].used_n == static_cast<int>(i + 1));
    strings += rows[i].string_count;
    if (rows[i].string_count == 0) {
      CHECK(std::isnan(rows[i].mean_km));
      continue;
    }
    CHECK(rows[i].mean_km > last);
    last = rows[i].mean_km;
  }
  CHECK(strings == d32().entries().size());
  CHECK(rows[0].string_count == 2);
  CHECK(rows[0].mean_length == 1.0);
  CHECK(std::isnan(instruction_group_table(d22())[2].mean_km));  // no string first needs 3 instructions
}

TEST_CASE("runtime groups tile the bound") {
  const Distribution d = build_distribution(full_oracle(3, 100));
  const auto rows = runtime_group_table(d, 5);
  REQUIRE(rows.size() == 20);
  std::size_t strings = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].lo == 5 * i + 1);
    CHECK(rows[i].hi == 5 * i + 5);
    strings += rows[i].string_count;
    if (rows[i].string_count > 0) {
      CHECK(rows[i].min_km <= rows[i].mean_km);
      CHECK(rows[i].mean_km <= rows[i].max_km);
    }
  }
  CHECK(strings == d.entries().size());
  std::size_t in_first = 0;
  for (const auto& e : d.entries()) in_first += e.ld <= 5;
  CHECK(rows[0].string_count == in_first);

  Aggregate a({4, 107, AggregateMode::FullOracle, BlankConvention::Both});
  a.add_string("0", {1, 1, 1});
  a.add_string("1", {1, 1, 1});
  const auto clipped = runtime_group_table(build_distribution(a), 25);
  REQUIRE(clipped.size() == 5);
  CHECK(clipped.back().lo == 101);
  CHECK(clipped.back().hi == 107);
  CHECK_THROWS(runtime_group_table(build_distribution(a), 0));
}
