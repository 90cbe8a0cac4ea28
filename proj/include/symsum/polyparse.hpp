#pragma once

#include "symsum/evaluate.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace symsum {

// One term c * x1^{e_1} ... xk^{e_k}. The exponent multiset always has one
// entry per declared variable; variables absent from the source text keep
// exponent 0.
struct Monomial {
  Int coefficient;
  ExponentMultiset exponents;

  bool operator==(const Monomial&) const = default;
};

// Sum of monomials over a fixed variable count. Terms are kept exactly as
// written: no merging, no reordering. The zero polynomial has no terms.
struct MonomialPolynomial {
  std::size_t arity = 0;
  std::vector<Monomial> terms;

  bool operator==(const MonomialPolynomial&) const = default;
};

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& message, std::size_t position);

  // Byte offset into the input text.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar, whitespace insignificant:
//   polynomial := ['+'|'-']? term (('+'|'-') term)*
//   term       := [integer '*']? factor ('*' factor)*
//   factor     := 'x' index ['^' integer]
// Variable indices are 1-based and must not exceed the arity. Repeating a
// variable inside one term adds the exponents. Empty input parses to the
// zero polynomial.
MonomialPolynomial parse_polynomial(const std::string& text, std::size_t arity);

// Text that parses back to a polynomial with identical terms. The zero
// polynomial prints as the empty string.
std::string to_string(const MonomialPolynomial& f);

struct TermEvaluation {
  Int coefficient;
  RingElement contribution;  // coefficient * details.value in the ring
  Evaluation details;
};

struct PolynomialEvaluation {
  RingElement value;
  std::vector<TermEvaluation> terms;
};

// Sum over terms of coefficient times the symmetric sum of the term's
// monomial, each term dispatched through evaluate. Requires arity <= |G|.
PolynomialEvaluation eval_sum(const UnitSubgroup& group, const MonomialPolynomial& f);

}  // namespace symsum
