#include "symsum/integers.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace symsum {

Int mod_floor(const Int& value, const Int& modulus) {
  Int r = value % modulus;
  if (r < 0) r += modulus;
  return r;
}

std::int64_t mod_floor64(const Int& value, std::int64_t modulus) {
  return mod_floor(value, Int(modulus)).convert_to<std::int64_t>();
}

Int gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

Int pow_mod(const Int& base, const Int& exponent, const Int& modulus) {
  if (exponent < 0) throw std::invalid_argument("pow_mod: negative exponent");
  if (modulus == 1) return 0;
  return boost::multiprecision::powm(mod_floor(base, modulus), exponent, modulus);
}

std::optional<Int> invert_mod(const Int& value, const Int& modulus) {
  // extended Euclid on (v, m); old_s tracks the Bezout coefficient of v
  Int old_r = mod_floor(value, modulus), r = modulus;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) return std::nullopt;
  return mod_floor(old_s, modulus);
}

Int factorial(std::uint64_t n) {
  Int result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

bool is_probable_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  if (n < (Int(1) << 32)) {
    std::uint64_t v = n.convert_to<std::uint64_t>();
    for (std::uint64_t d = 3; d * d <= v; d += 2)
      if (v % d == 0) return false;
    return true;
  }
  return boost::multiprecision::miller_rabin_test(n, 25);
}

Int parse_int(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  if (i == text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  for (; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("not an integer: '" + text + "'");
  // cpp_int's own parser rejects an explicit plus sign
  return Int(text[0] == '+' ? text.substr(1) : text);
}

}  // namespace symsum
