#pragma once

#include "symsum/ring.hpp"

#include <cstdint>
#include <vector>

namespace symsum {

// Finite subgroup of the units of Z/mZ, stored as the explicit ascending
// element list together with the multiplicative order of every element and
// the group exponent (lcm of all orders). Immutable once built.
class UnitSubgroup {
 public:
  const ModRing& ring() const { return ring_; }
  const std::vector<Int>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::int64_t exponent() const { return exponent_; }

  bool contains(const Int& value) const;
  std::int64_t order_of(const Int& value) const;  // throws when not a member
  std::int64_t order_of(const RingElement& g) const { return order_of(g.value()); }

  // Some element attaining order = exponent (finite abelian groups always
  // have one).
  const Int& max_order_element() const;

  // g^exponent with the exponent reduced mod ord(g); handles negative and
  // arbitrarily large exponents.
  RingElement pow(const RingElement& g, const Int& exponent) const;

 private:
  friend UnitSubgroup full_unit_group(const ModRing&);
  friend UnitSubgroup nth_residue_subgroup(const ModRing&, const Int&);
  friend UnitSubgroup generated_subgroup(const ModRing&, const std::vector<Int>&);

  UnitSubgroup(ModRing ring, std::vector<Int> sorted_units);
  std::size_t index_of(const Int& value) const;  // size() when absent

  ModRing ring_;
  std::vector<Int> elements_;
  std::vector<std::int64_t> orders_;  // parallel to elements_
  std::int64_t exponent_ = 1;
  std::size_t max_order_index_ = 0;
};

UnitSubgroup full_unit_group(const ModRing& ring);

// {u^n : u a unit}; n = 1 gives the full unit group.
UnitSubgroup nth_residue_subgroup(const ModRing& ring, const Int& n);

// Smallest multiplicatively closed subset containing 1 and the generators.
// Every generator must be a unit.
UnitSubgroup generated_subgroup(const ModRing& ring, const std::vector<Int>& generators);

std::int64_t element_order(const UnitSubgroup& group, const RingElement& g);
std::int64_t group_exponent(const UnitSubgroup& group);

}  // namespace symsum
