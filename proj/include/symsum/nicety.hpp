#pragma once

#include "symsum/sums.hpp"

#include <cstdint>
#include <optional>

namespace symsum {

// Verdict of the minimax test below. worst_subset and worst_value describe
// a subset attaining the minimum; when every subset sum is divisible by the
// group exponent the family is empty, the test passes vacuously, and both
// fields are meaningless (empty and 0).
struct NicenessReport {
  bool nice = false;
  std::int64_t threshold = 0;   // |D| + 1, D the non-regular ring elements
  std::vector<std::size_t> worst_subset;
  std::int64_t worst_value = 0;
  std::size_t family_size = 0;  // distinct sum residues with lambda ∤ sum
  bool vacuous = false;

  bool operator==(const NicenessReport&) const = default;
};

// Decides whether, over the nonempty position subsets B with lambda ∤ s(B),
//   min_B max_{g in G} ord(g) / gcd(s(B), ord(g)) >= |D| + 1.
// Subsets are collapsed by s(B) mod lambda first; the inner max only
// depends on that residue. The reported worst subset is the first subset in
// position-mask order that attains the minimum.
NicenessReport is_a_nice(const UnitSubgroup& group, const ExponentMultiset& exponents);

// The inner max two ways. The closed form lambda / gcd(s, lambda) works
// because some element has order lambda and d / gcd(s, d) divides
// lambda / gcd(s, lambda) whenever d divides lambda; the scan applies the
// definition element by element.
std::int64_t minimax_fast(const UnitSubgroup& group, const Int& subset_sum);
std::int64_t minimax_scan(const UnitSubgroup& group, const Int& subset_sum);

// Element base of the group whose power base^t has base^t - 1 regular.
// Such an element makes sum over x in G of x^t vanish: substituting
// x -> base * x permutes G, so (base^t - 1) times the sum is 0.
struct VanishingWitness {
  RingElement base;
  RingElement power;  // base^t
};

// Searches powers of a maximal-order element first, then the whole group.
// Empty when no element works.
std::optional<VanishingWitness> vanishing_witness(const UnitSubgroup& group, const Int& t);

// Sufficient condition for the q-th residue subgroup mod p^m (p an odd
// prime): lambda | s(A) for lambda = phi(p^m)/gcd(q, phi(p^m)), and every
// nonempty proper subset B has gcd(s(B), p(p-1)) * gcd(q, phi(p^m)) < p-1.
// When it holds the minimax test on that subgroup passes too.
bool example1_condition(const Int& p, const Int& m, const Int& q,
                        const ExponentMultiset& exponents);

// Sufficient condition for the full unit group mod pq, p and q distinct
// primes above 11 with p-1 dividing q+1: every nonempty proper subset B
// with 3(p+q) gcd(s(B), p-1) gcd(s(B), q-1) > pq must have s(B) divisible
// by phi(pq)/2. When it holds and lambda | s(A), the minimax test passes.
bool example2_condition(const Int& p, const Int& q, const ExponentMultiset& exponents);

}  // namespace symsum
