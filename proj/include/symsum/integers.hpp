#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace symsum {

// Exact arbitrary-precision integer. Residues, exponents and partition
// weights all use this type; intermediate factorials and falling-factorial
// prefactors overflow machine words long before the inputs look large.
using Int = boost::multiprecision::cpp_int;

// Least non-negative representative of value mod modulus (modulus > 0).
Int mod_floor(const Int& value, const Int& modulus);
std::int64_t mod_floor64(const Int& value, std::int64_t modulus);

// Non-negative gcd with gcd(0, d) = |d|.
Int gcd(const Int& a, const Int& b);
std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

// base^exponent mod modulus, exponent >= 0.
Int pow_mod(const Int& base, const Int& exponent, const Int& modulus);

// Inverse of value mod modulus, or empty when gcd(value, modulus) != 1.
std::optional<Int> invert_mod(const Int& value, const Int& modulus);

Int factorial(std::uint64_t n);

// Trial division below 2^32, Miller-Rabin above.
bool is_probable_prime(const Int& n);

// Decimal integer with optional sign; throws std::invalid_argument on
// anything else.
Int parse_int(const std::string& text);

}  // namespace symsum
