#include "symsum/ring.hpp"

#include <stdexcept>

namespace symsum {

namespace {

// Full scans over Z/mZ are meant for desk-scale moduli.
constexpr std::int64_t kMaxScanModulus = 5'000'000;

void require_same_ring(const RingElement& a, const RingElement& b) {
  if (a.modulus() != b.modulus())
    throw std::invalid_argument("ring elements have different moduli");
}

}  // namespace

RingElement::RingElement(Int value, Int modulus) : modulus_(std::move(modulus)) {
  if (modulus_ < 2) throw std::invalid_argument("modulus must be at least 2");
  value_ = mod_floor(value, modulus_);
}

RingElement operator+(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  return RingElement(a.value() + b.value(), a.modulus());
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b);
  return RingElement(a.value() * b.value(), a.modulus());
}

RingElement operator-(const RingElement& a) {
  return RingElement(-a.value(), a.modulus());
}

ModRing::ModRing(Int modulus) : modulus_(std::move(modulus)) {
  if (modulus_ < 2)
    throw std::invalid_argument("modulus must be at least 2 (the trivial ring is excluded)");
}

RingElement ModRing::element(const Int& value) const {
  return RingElement(value, modulus_);
}

bool ModRing::is_unit(const Int& value) const {
  return gcd(value, modulus_) == 1;
}

std::optional<RingElement> ModRing::inverse(const RingElement& a) const {
  if (a.modulus() != modulus_)
    throw std::invalid_argument("element does not belong to this ring");
  auto inv = invert_mod(a.value(), modulus_);
  if (!inv) return std::nullopt;
  return element(*inv);
}

bool ModRing::is_regular(const RingElement& a) const {
  if (a.modulus() != modulus_)
    throw std::invalid_argument("element does not belong to this ring");
  return is_unit(a.value());
}

bool ModRing::is_regular_by_scan(const RingElement& a) const {
  if (a.modulus() != modulus_)
    throw std::invalid_argument("element does not belong to this ring");
  if (modulus_ > kMaxScanModulus)
    throw std::invalid_argument("modulus too large for an exhaustive regularity scan");
  for (Int x = 1; x < modulus_; ++x)
    if (mod_floor(a.value() * x, modulus_) == 0) return false;
  return true;
}

Int ModRing::unit_count() const {
  if (modulus_ > kMaxScanModulus)
    throw std::invalid_argument("modulus too large for a unit scan");
  Int count = 0;
  for (Int v = 1; v < modulus_; ++v)
    if (is_unit(v)) ++count;
  return count;
}

Int ModRing::non_regular_count() const { return modulus_ - unit_count(); }

std::vector<Int> ModRing::unit_values() const {
  if (modulus_ > kMaxScanModulus)
    throw std::invalid_argument("modulus too large for a unit scan");
  std::vector<Int> units;
  for (Int v = 1; v < modulus_; ++v)
    if (is_unit(v)) units.push_back(v);
  return units;
}

RingElement ModRing::pow(const RingElement& base, const Int& exponent) const {
  if (base.modulus() != modulus_)
    throw std::invalid_argument("element does not belong to this ring");
  if (exponent >= 0) return element(pow_mod(base.value(), exponent, modulus_));
  auto inv = inverse(base);
  if (!inv)
    throw std::invalid_argument("negative exponent requires an invertible base");
  return element(pow_mod(inv->value(), -exponent, modulus_));
}

ModRing make_ring(const Int& modulus) { return ModRing(modulus); }

}  // namespace symsum
