#include "symsum/evaluate.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace symsum;

TEST_CASE("partition formula route after dropping a divisible exponent") {
  UnitSubgroup g7 = full_unit_group(make_ring(7));
  Evaluation e = evaluate(g7, {6, 2, 4});
  CHECK(e.value.value() == 4);
  CHECK(e.method == Method::closed_form);
  CHECK(e.nice);
  CHECK(e.prefactor == 4);
  REQUIRE(e.niceness.has_value());
  CHECK(e.niceness->nice);
  CHECK(e.value == brute_force_p(g7, {6, 2, 4}));
}

TEST_CASE("vanishing route when the total is not divisible") {
  UnitSubgroup g7 = full_unit_group(make_ring(7));
  Evaluation e = evaluate(g7, {1, 2});
  CHECK(e.value.value() == 0);
  CHECK(e.method == Method::vanishing);
  CHECK(e.nice);
  CHECK(e.prefactor == 1);
  CHECK(brute_force_p(g7, {1, 2}).value() == 0);
}

TEST_CASE("fallback route when the minimax test fails") {
  UnitSubgroup g9 = full_unit_group(make_ring(9));
  Evaluation e = evaluate(g9, {1, 5, 2, 4});
  CHECK(e.method == Method::brute_force);
  CHECK(!e.nice);
  CHECK(e.value == brute_force_p(g9, {1, 5, 2, 4}));
  REQUIRE(e.niceness.has_value());
  CHECK(!e.niceness->nice);
  CHECK(e.niceness->worst_value == 2);
}

TEST_CASE("all positions dropped leaves the falling factorial") {
  UnitSubgroup g7 = full_unit_group(make_ring(7));
  Evaluation e = evaluate(g7, {6, 6});
  CHECK(e.prefactor == 30);  // 6 * 5 tuples of units, each contributing 1
  CHECK(e.value.value() == 2);
  CHECK(e.method == Method::closed_form);
  CHECK(e.nice);
  CHECK(!e.niceness.has_value());
  CHECK(e.value == brute_force_p(g7, {6, 6}));

  Evaluation empty = evaluate(g7, {});
  CHECK(empty.value.value() == 1);
  CHECK(empty.prefactor == 1);
}

TEST_CASE("forcing the formula skips the fallback") {
  UnitSubgroup g9 = full_unit_group(make_ring(9));
  Evaluation forced = evaluate(g9, {1, 5, 2, 4}, true);
  CHECK(forced.method == Method::closed_form);
  CHECK(!forced.nice);
  CHECK(forced.value == closed_form_p(g9, {1, 5, 2, 4}));
  // here the unverified value happens to agree with the exhaustive sum
  CHECK(forced.value == brute_force_p(g9, {1, 5, 2, 4}));
}

TEST_CASE("more positions than elements is rejected") {
  UnitSubgroup squares = nth_residue_subgroup(make_ring(5), 2);  // {1, 4}
  CHECK_THROWS_AS(evaluate(squares, {1, 1, 1}), std::invalid_argument);
  CHECK(evaluate(squares, {1, 1}).value == brute_force_p(squares, {1, 1}));
}

TEST_CASE("pipeline agrees with the exhaustive sum on random input") {
  std::mt19937_64 rng(29);
  std::vector<UnitSubgroup> groups;
  for (int m : {7, 9, 13, 15, 25}) {
    ModRing r = make_ring(m);
    groups.push_back(full_unit_group(r));
    groups.push_back(nth_residue_subgroup(r, 2));
  }
  for (int round = 0; round < 120; ++round) {
    const UnitSubgroup& g = groups[rng() % groups.size()];
    std::size_t k = 1 + rng() % 3;
    if (k > g.size()) k = g.size();
    std::vector<Int> exps;
    for (std::size_t i = 0; i < k; ++i)
      exps.push_back(static_cast<std::int64_t>(rng() % (4 * g.exponent())) -
                     2 * g.exponent());
    ExponentMultiset a(exps);
    CHECK(evaluate(g, a).value == brute_force_p(g, a));
  }
}

TEST_CASE("method names") {
  CHECK(method_name(Method::closed_form) == "closed_form");
  CHECK(method_name(Method::vanishing) == "vanishing");
  CHECK(method_name(Method::brute_force) == "brute_force");
}
