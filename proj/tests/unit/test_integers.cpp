#include "symsum/integers.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace symsum;

TEST_CASE("mod_floor maps into [0, modulus)") {
  CHECK(mod_floor(7, 3) == 1);
  CHECK(mod_floor(-1, 9) == 8);
  CHECK(mod_floor(-9, 9) == 0);
  CHECK(mod_floor(0, 5) == 0);
  CHECK(mod_floor(Int("123456789012345678901234567890"), 97) ==
        Int("123456789012345678901234567890") % 97);
  CHECK(mod_floor64(-1, 6) == 5);
  CHECK(mod_floor64(Int(131), 132) == 131);
}

TEST_CASE("gcd is non-negative and gcd(0, d) = |d|") {
  CHECK(gcd(12, 18) == 6);
  CHECK(gcd(-12, 18) == 6);
  CHECK(gcd(0, 7) == 7);
  CHECK(gcd(0, -7) == 7);
  CHECK(gcd(0, 0) == 0);
  CHECK(gcd64(0, 6) == 6);
  CHECK(gcd64(9, 6) == 3);
  CHECK(lcm64(4, 6) == 12);
  CHECK(lcm64(1, 1) == 1);
}

TEST_CASE("pow_mod computes base^e mod m for e >= 0") {
  CHECK(pow_mod(2, 10, 1000) == 24);
  CHECK(pow_mod(5, 0, 9) == 1);
  CHECK(pow_mod(8, 4, 13) == 1);
  CHECK(pow_mod(0, 5, 7) == 0);
}

TEST_CASE("invert_mod is empty exactly for non-units") {
  CHECK(invert_mod(5, 9) == Int(2));
  CHECK(!invert_mod(3, 9).has_value());
  CHECK(invert_mod(1, 17) == Int(1));
  auto inv = invert_mod(131, 299);
  REQUIRE(inv.has_value());
  CHECK(mod_floor(*inv * 131, 299) == 1);
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(6) == 720);
  CHECK(factorial(20) == Int("2432902008176640000"));
}

TEST_CASE("primality of small and large inputs") {
  CHECK(is_probable_prime(2));
  CHECK(is_probable_prime(13));
  CHECK(is_probable_prime(23));
  CHECK(!is_probable_prime(1));
  CHECK(!is_probable_prime(24));
  CHECK(!is_probable_prime(299));
  CHECK(is_probable_prime(Int("1000000000000000003")));
  CHECK(!is_probable_prime(Int("1000000000000000001")));
}

TEST_CASE("parse_int accepts signed decimals only") {
  CHECK(parse_int("42") == 42);
  CHECK(parse_int("-7") == -7);
  CHECK(parse_int("+9") == 9);
  CHECK_THROWS_AS(parse_int(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_int("12a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_int("-"), std::invalid_argument);
  CHECK_THROWS_AS(parse_int("1 2"), std::invalid_argument);
}
