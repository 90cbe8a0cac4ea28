#include "symsum/ring.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace symsum;

TEST_CASE("ring construction rejects moduli below 2") {
  CHECK_THROWS_AS(make_ring(1), std::invalid_argument);
  CHECK_THROWS_AS(make_ring(0), std::invalid_argument);
  CHECK_THROWS_AS(make_ring(-5), std::invalid_argument);
  CHECK(make_ring(2).modulus() == 2);
}

TEST_CASE("elements normalize into [0, m)") {
  ModRing r = make_ring(9);
  CHECK(r.element(10).value() == 1);
  CHECK(r.element(-1).value() == 8);
  CHECK(r.element(0).value() == 0);
  CHECK(r.element(Int("123456789123456789")).value() ==
        Int("123456789123456789") % 9);
}

TEST_CASE("residue arithmetic") {
  ModRing r7 = make_ring(7);
  ModRing r9 = make_ring(9);
  CHECK((r7.element(4) * r7.element(5)).value() == 6);
  CHECK((r9.element(8) + r9.element(1)).value() == 0);
  CHECK((-r9.element(0)).value() == 0);
  CHECK((-r7.element(3)).value() == 4);
  CHECK_THROWS_AS(r7.element(1) + r9.element(1), std::invalid_argument);
  CHECK_THROWS_AS(r7.element(1) * r9.element(1), std::invalid_argument);
}

TEST_CASE("inverse exists exactly for units") {
  ModRing r9 = make_ring(9);
  auto inv5 = r9.inverse(r9.element(5));
  REQUIRE(inv5.has_value());
  CHECK(inv5->value() == 2);
  CHECK(!r9.inverse(r9.element(3)).has_value());
  CHECK(r9.inverse(r9.one())->value() == 1);
}

TEST_CASE("regularity shortcut and examples") {
  ModRing r9 = make_ring(9);
  CHECK(!r9.is_regular(r9.element(3)));
  CHECK(r9.is_regular(r9.element(2)));
  CHECK(!r9.is_regular(r9.element(0)));
  CHECK(!make_ring(7).is_regular(make_ring(7).element(0)));
  CHECK(!make_ring(299).is_regular(make_ring(299).element(0)));
  CHECK(make_ring(2).is_regular(make_ring(2).one()));
}

TEST_CASE("non-regular counts") {
  CHECK(make_ring(7).non_regular_count() == 1);
  CHECK(make_ring(9).non_regular_count() == 3);
  CHECK(make_ring(299).non_regular_count() == 35);
  CHECK(make_ring(15).non_regular_count() == 7);
}

TEST_CASE("regular equals invertible equals scan, and unit counts are right") {
  for (int m : {2, 3, 4, 5, 6, 7, 8, 9, 12, 15, 25, 27, 49, 60}) {
    ModRing r = make_ring(m);
    Int units = 0;
    for (Int v = 0; v < m; ++v) {
      RingElement a = r.element(v);
      const bool invertible = r.inverse(a).has_value();
      CHECK(r.is_regular(a) == invertible);
      CHECK(r.is_regular_by_scan(a) == invertible);
      if (invertible) {
        ++units;
        CHECK((*r.inverse(a) * a).value() == 1);
      }
    }
    CHECK(units == r.unit_count());
    CHECK(r.non_regular_count() == Int(m) - units);
  }
}

TEST_CASE("unit_values lists exactly the units in order") {
  ModRing r9 = make_ring(9);
  CHECK(r9.unit_values() == std::vector<Int>{1, 2, 4, 5, 7, 8});
  CHECK(make_ring(7).unit_values() == std::vector<Int>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("ring pow handles negative exponents for units") {
  ModRing r9 = make_ring(9);
  CHECK(r9.pow(r9.element(2), 3).value() == 8);
  CHECK(r9.pow(r9.element(5), -1).value() == 2);
  CHECK(r9.pow(r9.element(2), 0).value() == 1);
  CHECK_THROWS_AS(r9.pow(r9.element(3), -1), std::invalid_argument);
}
