#pragma once

#include "symsum/group.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace symsum {

// Position-indexed multiset of integer exponents (a_0, ..., a_{k-1}).
// Exponents may be negative or huge; unit bases make negative powers
// well-defined.
class ExponentMultiset {
 public:
  ExponentMultiset() = default;
  ExponentMultiset(std::vector<Int> exponents) : exponents_(std::move(exponents)) {}
  ExponentMultiset(std::initializer_list<Int> exponents) : exponents_(exponents) {}

  std::size_t size() const { return exponents_.size(); }
  bool empty() const { return exponents_.empty(); }
  const Int& at(std::size_t i) const { return exponents_.at(i); }
  const std::vector<Int>& exponents() const { return exponents_; }

  // s(B) for a set of positions; the empty set sums to 0.
  Int subset_sum(std::span<const std::size_t> positions) const;
  Int total() const;

  // Exponents reduced into [0, lambda); divisibility questions mod lambda
  // only ever depend on these.
  std::vector<std::int64_t> residues(std::int64_t lambda) const;

  // Copy with one position removed.
  ExponentMultiset without(std::size_t position) const;

  bool operator==(const ExponentMultiset&) const = default;

 private:
  std::vector<Int> exponents_;
};

// A set partition of the positions {0, ..., k-1}: disjoint nonempty blocks
// covering every position. Canonical form sorts each block and orders
// blocks by their first position.
using Partition = std::vector<std::vector<std::size_t>>;

Partition canonical_partition(Partition partition);

// The partitions of A's positions whose every block has exponent sum
// divisible by lambda.
struct PartitionFamily {
  std::vector<Partition> partitions;  // canonical, sorted

  std::size_t size() const { return partitions.size(); }
  bool operator==(const PartitionFamily&) const = default;
};

// Removes the positions whose exponent is divisible by lambda (they
// contribute x^a = 1) and charges them to a falling-factorial prefactor:
//   p(A) = (n - |kept|)(n - |kept| - 1) ... (n - k + 1) * p(reduced).
// The prefactor is the empty product 1 when nothing is removed.
struct Reduction {
  ExponentMultiset reduced;
  std::vector<std::size_t> kept;  // positions of A that survived
  Int prefactor;
};

Reduction reduce(const ExponentMultiset& exponents, std::int64_t lambda,
                 std::int64_t group_order);

// Characteristic number of a block: n * (-1)^(size-1) * (size-1)!.
Int chi(std::size_t block_size, std::int64_t group_order);

// Enumerates the lambda-divisible partition family two ways. The recursive
// enumerator fixes the first position x and emits either the one-block
// partition or {X \ Y} together with a partition of a divisible-sum subset
// Y avoiding x. The naive enumerator filters every set partition and is
// the oracle for small k.
PartitionFamily valid_partitions(const ExponentMultiset& exponents, std::int64_t lambda);
PartitionFamily valid_partitions_naive(const ExponentMultiset& exponents, std::int64_t lambda);

// Integer value of the partition formula sum over 𝒫(A) of the product of
// block characteristic numbers. Requires lambda ∤ a_i for every exponent.
// The subset DP
//   f(S) = sum over divisible blocks P ⊆ S containing min S of chi(|P|) f(S\P)
// is the default route; the enumerated route sums over the explicit family
// and must agree.
Int closed_form_weight(const ExponentMultiset& exponents, std::int64_t lambda,
                       std::int64_t group_order);
Int closed_form_weight_enumerated(const ExponentMultiset& exponents, std::int64_t lambda,
                                  std::int64_t group_order);

// Partition-formula value of p(A) in the ring. Preconditions: k <= |G| and
// lambda ∤ a_i for every exponent (reduce first otherwise). Does not check
// that the formula applies; callers verify the minimax condition or accept
// the value unverified.
RingElement closed_form_p(const UnitSubgroup& group, const ExponentMultiset& exponents);

// Exhaustive oracle: sum of x_0^{a_0} ... x_{k-1}^{a_{k-1}} over all
// injective k-tuples from the group. Empty sum (k > |G|) gives 0, the
// empty product (k = 0) gives 1.
RingElement brute_force_p(const UnitSubgroup& group, const ExponentMultiset& exponents);

// Truncated variant: every coordinate must also differ from 1.
RingElement brute_force_p_sharp(const UnitSubgroup& group, const ExponentMultiset& exponents);

// Checks, with both sides brute-forced,
//   p#(A) = sum over B ⊆ A of (-1)^(k-|B|) (k-|B|)! p(B).
struct InclusionExclusionCheck {
  bool holds;
  RingElement lhs;  // p#(A)
  RingElement rhs;  // the alternating subset sum
};

InclusionExclusionCheck check_inclusion_exclusion(const UnitSubgroup& group,
                                                  const ExponentMultiset& exponents);

namespace detail {
// Arbitrary-precision enumeration path; brute_force_p switches to a
// machine-word path for small moduli and this stays available to test the
// two against each other.
RingElement brute_force_p_wide(const UnitSubgroup& group, const ExponentMultiset& exponents,
                               bool skip_identity);
}  // namespace detail

}  // namespace symsum
