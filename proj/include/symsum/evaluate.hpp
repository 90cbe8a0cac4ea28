#pragma once

#include "symsum/nicety.hpp"

#include <optional>
#include <string>

namespace symsum {

enum class Method { closed_form, vanishing, brute_force };

std::string method_name(Method method);

// Result of the full pipeline. prefactor is the falling-factorial weight
// accumulated while dropping divisible-exponent positions; niceness is
// absent only when nothing was left to test (all positions dropped).
struct Evaluation {
  RingElement value;
  Method method = Method::brute_force;
  bool nice = false;
  Int prefactor = 1;
  std::optional<NicenessReport> niceness;
};

// Evaluates the sum of x_0^{a_0} ... x_{k-1}^{a_{k-1}} over injective
// tuples from the group. Divisible-exponent positions are dropped first
// and charged to the prefactor; the surviving positions either vanish
// (minimax test passed, exponent sum not divisible), take the partition
// formula (test passed, sum divisible), or fall back to the exhaustive
// sum when the test fails. force_closed_form applies the partition
// formula even when the test fails; the result is then unverified.
// Requires k <= |G|.
Evaluation evaluate(const UnitSubgroup& group, const ExponentMultiset& exponents,
                    bool force_closed_form = false);

}  // namespace symsum
