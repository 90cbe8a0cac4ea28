#include "symsum/nicety.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace symsum;

TEST_CASE("minimax verdict on reference instances") {
  UnitSubgroup g9 = full_unit_group(make_ring(9));

  NicenessReport ok = is_a_nice(g9, {1, 5});
  CHECK(ok.nice);
  CHECK(ok.threshold == 4);
  CHECK(ok.worst_value == 6);
  CHECK(ok.family_size == 2);
  CHECK(!ok.vacuous);

  NicenessReport bad = is_a_nice(g9, {1, 5, 2, 4});
  CHECK(!bad.nice);
  CHECK(bad.threshold == 4);
  CHECK(bad.worst_value == 2);
  // the reported subset attains the minimum: sum 3 mod 6, 6/gcd(3,6) = 2
  ExponentMultiset a{1, 5, 2, 4};
  CHECK(minimax_fast(g9, a.subset_sum(bad.worst_subset)) == 2);
}

TEST_CASE("fields are always nice") {
  UnitSubgroup g7 = full_unit_group(make_ring(7));
  CHECK(g7.ring().non_regular_count() == 1);
  std::mt19937_64 rng(3);
  for (int round = 0; round < 40; ++round) {
    std::size_t k = 1 + rng() % 4;
    std::vector<Int> exps;
    for (std::size_t i = 0; i < k; ++i)
      exps.push_back(static_cast<std::int64_t>(rng() % 12) - 6);
    CHECK(is_a_nice(g7, ExponentMultiset(exps)).nice);
  }
}

TEST_CASE("vacuous family counts as nice") {
  UnitSubgroup g9 = full_unit_group(make_ring(9));
  NicenessReport r = is_a_nice(g9, {6, 12});
  CHECK(r.nice);
  CHECK(r.vacuous);
  CHECK(r.family_size == 0);
  CHECK(is_a_nice(g9, {}).vacuous);
}

TEST_CASE("fast minimax equals the per-element scan") {
  std::vector<UnitSubgroup> groups;
  for (int m : {5, 7, 9, 13, 15, 25, 27, 299}) {
    ModRing r = make_ring(m);
    groups.push_back(full_unit_group(r));
    groups.push_back(nth_residue_subgroup(r, 2));
    groups.push_back(nth_residue_subgroup(r, 3));
  }
  groups.push_back(generated_subgroup(make_ring(13), {8}));
  groups.push_back(generated_subgroup(make_ring(15), {2, 11}));
  for (const UnitSubgroup& g : groups)
    for (std::int64_t s = 0; s < g.exponent(); ++s)
      CHECK(minimax_fast(g, s) == minimax_scan(g, s));
}

TEST_CASE("the inner max is at least the least prime factor of lambda") {
  for (int m : {9, 13, 15, 25, 27}) {
    UnitSubgroup g = full_unit_group(make_ring(m));
    const std::int64_t lambda = g.exponent();
    std::int64_t least_prime = 2;
    while (lambda % least_prime != 0) ++least_prime;
    for (std::int64_t s = 1; s < lambda; ++s)
      CHECK(minimax_fast(g, s) >= least_prime);
  }
}

TEST_CASE("vanishing witness exists for nice non-divisible sums") {
  UnitSubgroup g9 = full_unit_group(make_ring(9));
  for (std::int64_t t = 1; t <= 12; ++t) {
    if (t % 6 == 0) continue;
    ExponentMultiset a{Int(t)};
    if (!is_a_nice(g9, a).nice) continue;
    auto w = vanishing_witness(g9, t);
    REQUIRE(w.has_value());
    CHECK(g9.contains(w->base.value()));
    CHECK(w->power == g9.pow(w->base, t));
    CHECK(g9.ring().is_regular(w->power + (-g9.ring().one())));
  }
}

TEST_CASE("witness certifies the vanishing sum") {
  for (int m : {7, 9, 13, 15}) {
    UnitSubgroup g = full_unit_group(make_ring(m));
    for (std::int64_t t = 1; t <= 2 * g.exponent(); ++t) {
      if (t % g.exponent() == 0) continue;
      auto w = vanishing_witness(g, t);
      if (!w) continue;
      RingElement sum = g.ring().zero();
      for (const Int& x : g.elements()) sum = sum + g.pow(g.ring().element(x), t);
      CHECK(sum.value() == 0);
    }
  }
}

TEST_CASE("prime power residue condition on reference instances") {
  CHECK(example1_condition(3, 2, 1, {1, 5}));
  CHECK(!example1_condition(3, 2, 1, {2, 4}));
  CHECK(example1_condition(13, 1, 3, {2, 2}));
  CHECK(!example1_condition(3, 2, 1, {1, 4}));  // sum 5 not divisible by 6
  CHECK_THROWS_AS(example1_condition(4, 1, 1, {1}), std::invalid_argument);
  CHECK_THROWS_AS(example1_condition(2, 1, 1, {1}), std::invalid_argument);
  CHECK_THROWS_AS(example1_condition(7, 0, 1, {1}), std::invalid_argument);
}

TEST_CASE("prime power residue condition implies the minimax condition") {
  struct Instance {
    int p, m, q;
  };
  for (Instance inst : {Instance{3, 2, 1}, Instance{13, 1, 3}, Instance{5, 2, 2}}) {
    Int modulus = 1;
    for (int i = 0; i < inst.m; ++i) modulus *= inst.p;
    UnitSubgroup g = nth_residue_subgroup(make_ring(modulus), inst.q);
    const std::int64_t lambda = g.exponent();
    std::mt19937_64 rng(17);
    int found = 0;
    for (int round = 0; round < 400 && found < 12; ++round) {
      std::size_t k = 1 + rng() % 3;
      std::vector<Int> exps;
      std::int64_t sum = 0;
      for (std::size_t i = 0; i + 1 < k; ++i) {
        std::int64_t a = 1 + static_cast<std::int64_t>(rng() % (2 * lambda));
        exps.push_back(a);
        sum += a;
      }
      std::int64_t rest = (lambda - sum % lambda) % lambda;
      exps.push_back(rest == 0 ? lambda : rest);
      ExponentMultiset a(exps);
      if (!example1_condition(inst.p, inst.m, inst.q, a)) continue;
      ++found;
      CHECK(is_a_nice(g, a).nice);
    }
    CHECK(found > 0);
  }
}

TEST_CASE("semiprime condition on reference instances") {
  CHECK(example2_condition(13, 23, {1, 131}));
  CHECK(!example2_condition(13, 23, {12, 120}));
  CHECK_THROWS_AS(example2_condition(13, 24, {1, 131}), std::invalid_argument);
  CHECK_THROWS_AS(example2_condition(4, 23, {1}), std::invalid_argument);
  CHECK_THROWS_AS(example2_condition(7, 13, {1}), std::invalid_argument);
  CHECK_THROWS_AS(example2_condition(13, 13, {1}), std::invalid_argument);
  CHECK_THROWS_AS(example2_condition(13, 29, {1}), std::invalid_argument);
}

TEST_CASE("semiprime condition implies the minimax condition") {
  UnitSubgroup g = full_unit_group(make_ring(299));
  const std::int64_t lambda = g.exponent();
  std::mt19937_64 rng(23);
  int found = 0;
  for (int round = 0; round < 300 && found < 10; ++round) {
    std::int64_t a = 1 + static_cast<std::int64_t>(rng() % (2 * lambda));
    std::int64_t b = (lambda - a % lambda) % lambda;
    if (b == 0) b = lambda;
    ExponentMultiset seq{a, b};
    if (!example2_condition(13, 23, seq)) continue;
    ++found;
    CHECK(is_a_nice(g, seq).nice);
  }
  CHECK(found > 0);
}
