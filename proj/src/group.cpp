#include "symsum/group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace symsum {

namespace {
constexpr std::size_t kMaxSubgroupSize = 1'000'000;
}

UnitSubgroup::UnitSubgroup(ModRing ring, std::vector<Int> sorted_units)
    : ring_(std::move(ring)), elements_(std::move(sorted_units)) {
  orders_.reserve(elements_.size());
  const Int& m = ring_.modulus();
  std::int64_t best = 0;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const Int& g = elements_[i];
    Int x = g;
    std::int64_t ord = 1;
    while (x != 1) {
      x = mod_floor(x * g, m);
      ++ord;
    }
    orders_.push_back(ord);
    exponent_ = lcm64(exponent_, ord);
    if (ord > best) {
      best = ord;
      max_order_index_ = i;
    }
  }
}

bool UnitSubgroup::contains(const Int& value) const {
  return index_of(value) != elements_.size();
}

std::size_t UnitSubgroup::index_of(const Int& value) const {
  Int v = mod_floor(value, ring_.modulus());
  auto it = std::lower_bound(elements_.begin(), elements_.end(), v);
  if (it == elements_.end() || *it != v) return elements_.size();
  return static_cast<std::size_t>(it - elements_.begin());
}

std::int64_t UnitSubgroup::order_of(const Int& value) const {
  std::size_t idx = index_of(value);
  if (idx == elements_.size())
    throw std::invalid_argument("element is not a member of the subgroup");
  return orders_[idx];
}

const Int& UnitSubgroup::max_order_element() const {
  return elements_[max_order_index_];
}

RingElement UnitSubgroup::pow(const RingElement& g, const Int& exponent) const {
  std::size_t idx = index_of(g.value());
  if (idx == elements_.size()) return ring_.pow(g, exponent);
  std::int64_t r = mod_floor64(exponent, orders_[idx]);
  return ring_.element(pow_mod(g.value(), Int(r), ring_.modulus()));
}

UnitSubgroup full_unit_group(const ModRing& ring) {
  return UnitSubgroup(ring, ring.unit_values());
}

UnitSubgroup nth_residue_subgroup(const ModRing& ring, const Int& n) {
  if (n < 1) throw std::invalid_argument("residue power must be positive");
  std::set<Int> image;
  for (const Int& u : ring.unit_values())
    image.insert(pow_mod(u, n, ring.modulus()));
  return UnitSubgroup(ring, std::vector<Int>(image.begin(), image.end()));
}

UnitSubgroup generated_subgroup(const ModRing& ring, const std::vector<Int>& generators) {
  std::vector<Int> gens;
  gens.reserve(generators.size());
  for (const Int& g : generators) {
    Int v = mod_floor(g, ring.modulus());
    if (!ring.is_unit(v))
      throw std::invalid_argument("generator " + g.str() + " is not a unit mod " +
                                  ring.modulus().str());
    gens.push_back(v);
  }
  // worklist closure under products; finiteness of the ring bounds it
  std::set<Int> closure{Int(1)};
  std::deque<Int> work{Int(1)};
  while (!work.empty()) {
    Int x = work.front();
    work.pop_front();
    for (const Int& g : gens) {
      Int y = mod_floor(x * g, ring.modulus());
      if (closure.insert(y).second) {
        if (closure.size() > kMaxSubgroupSize)
          throw std::invalid_argument("generated subgroup exceeds the supported size");
        work.push_back(y);
      }
    }
  }
  return UnitSubgroup(ring, std::vector<Int>(closure.begin(), closure.end()));
}

std::int64_t element_order(const UnitSubgroup& group, const RingElement& g) {
  return group.order_of(g);
}

std::int64_t group_exponent(const UnitSubgroup& group) { return group.exponent(); }

}  // namespace symsum
