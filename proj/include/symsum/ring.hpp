#pragma once

#include "symsum/integers.hpp"

#include <optional>
#include <vector>

namespace symsum {

class ModRing;

// Residue in [0, modulus). Elements are plain values; two elements combine
// only when their moduli agree.
class RingElement {
 public:
  RingElement(Int value, Int modulus);

  const Int& value() const { return value_; }
  const Int& modulus() const { return modulus_; }

  bool operator==(const RingElement& other) const = default;

 private:
  Int value_;
  Int modulus_;
};

RingElement operator+(const RingElement& a, const RingElement& b);
RingElement operator*(const RingElement& a, const RingElement& b);
RingElement operator-(const RingElement& a);

// The ring Z/mZ, m >= 2. A ring is identified by its modulus; all state is
// derived on demand, so copies are cheap and concurrent use needs no locks.
class ModRing {
 public:
  explicit ModRing(Int modulus);

  const Int& modulus() const { return modulus_; }
  Int size() const { return modulus_; }

  RingElement element(const Int& value) const;
  RingElement zero() const { return element(0); }
  RingElement one() const { return element(1); }

  bool is_unit(const Int& value) const;
  std::optional<RingElement> inverse(const RingElement& a) const;

  // In a finite commutative ring an element is regular exactly when it is a
  // unit, so this reduces to a gcd test. is_regular_by_scan applies the
  // definition (a*x = 0 forces x = 0) by checking every ring element and
  // exists so the shortcut can be cross-checked.
  bool is_regular(const RingElement& a) const;
  bool is_regular_by_scan(const RingElement& a) const;

  Int unit_count() const;         // Euler phi(m), by scan
  Int non_regular_count() const;  // |D| = m - phi(m)

  // Ascending list of all unit residues. Refuses moduli too large for a
  // full scan.
  std::vector<Int> unit_values() const;

  // base^exponent; negative exponents require a unit base.
  RingElement pow(const RingElement& base, const Int& exponent) const;

  bool operator==(const ModRing& other) const = default;

 private:
  Int modulus_;
};

ModRing make_ring(const Int& modulus);

}  // namespace symsum
