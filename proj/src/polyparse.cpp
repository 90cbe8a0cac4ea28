#include "symsum/polyparse.hpp"

#include <cctype>
#include <sstream>

namespace symsum {

parse_error::parse_error(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

class Parser {
 public:
  Parser(const std::string& text, std::size_t arity) : text_(text), arity_(arity) {}

  MonomialPolynomial parse() {
    MonomialPolynomial poly;
    poly.arity = arity_;
    skip_whitespace();
    if (at_end()) return poly;
    int sign = 1;
    if (peek() == '+' || peek() == '-') sign = advance() == '-' ? -1 : 1;
    poly.terms.push_back(parse_term(sign));
    skip_whitespace();
    while (!at_end()) {
      const char c = peek();
      if (c != '+' && c != '-') throw parse_error("expected '+' or '-'", pos_);
      advance();
      poly.terms.push_back(parse_term(c == '-' ? -1 : 1));
      skip_whitespace();
    }
    return poly;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char advance() { return text_[pos_++]; }

  void skip_whitespace() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_integer_start() {
    if (at_end()) return false;
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return true;
    if (c != '+' && c != '-') return false;
    const std::size_t next = pos_ + 1;
    return next < text_.size() && std::isdigit(static_cast<unsigned char>(text_[next]));
  }

  Int parse_integer() {
    skip_whitespace();
    const std::size_t start = pos_;
    std::string digits;
    if (!at_end() && (peek() == '+' || peek() == '-')) digits += advance();
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += advance();
    if (digits.empty() || !std::isdigit(static_cast<unsigned char>(digits.back())))
      throw parse_error("expected integer", start);
    return Int(digits);
  }

  std::size_t parse_index() {
    const std::size_t start = pos_;
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += advance();
    if (digits.empty()) throw parse_error("expected variable index", start);
    if (digits.size() > 9 || std::stoull(digits) > arity_ || digits == "0" ||
        digits.front() == '0')
      throw parse_error("variable index out of range", start);
    return static_cast<std::size_t>(std::stoull(digits));
  }

  void parse_factor(std::vector<Int>& exponents) {
    skip_whitespace();
    if (at_end() || peek() != 'x') throw parse_error("expected 'x'", pos_);
    advance();
    const std::size_t index = parse_index();
    Int exponent = 1;
    skip_whitespace();
    if (!at_end() && peek() == '^') {
      advance();
      exponent = parse_integer();
    }
    exponents[index - 1] += exponent;
  }

  Monomial parse_term(int sign) {
    skip_whitespace();
    Int coefficient = 1;
    if (at_integer_start()) {
      coefficient = parse_integer();
      skip_whitespace();
      if (at_end() || peek() != '*') throw parse_error("expected '*'", pos_);
      advance();
    }
    std::vector<Int> exponents(arity_, Int(0));
    parse_factor(exponents);
    skip_whitespace();
    while (!at_end() && peek() == '*') {
      advance();
      parse_factor(exponents);
      skip_whitespace();
    }
    return Monomial{sign * coefficient, ExponentMultiset(std::move(exponents))};
  }

  const std::string& text_;
  std::size_t arity_;
  std::size_t pos_ = 0;
};

}  // namespace

MonomialPolynomial parse_polynomial(const std::string& text, std::size_t arity) {
  return Parser(text, arity).parse();
}

std::string to_string(const MonomialPolynomial& f) {
  std::ostringstream out;
  bool first = true;
  for (const Monomial& term : f.terms) {
    const bool negative = term.coefficient < 0;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const Int magnitude = negative ? Int(-term.coefficient) : term.coefficient;

    std::ostringstream factors;
    bool any = false;
    for (std::size_t i = 0; i < term.exponents.size(); ++i) {
      const Int& e = term.exponents.at(i);
      if (e == 0) continue;
      if (any) factors << "*";
      any = true;
      factors << "x" << (i + 1);
      if (e != 1) factors << "^" << e;
    }
    if (!any) factors << "x1^0";  // a term needs at least one factor

    if (magnitude != 1) out << magnitude << "*";
    out << factors.str();
  }
  return out.str();
}

PolynomialEvaluation eval_sum(const UnitSubgroup& group, const MonomialPolynomial& f) {
  if (f.arity > group.size())
    throw std::invalid_argument("arity exceeds the group size");
  const ModRing& ring = group.ring();
  RingElement total = ring.zero();
  std::vector<TermEvaluation> terms;
  terms.reserve(f.terms.size());
  for (const Monomial& term : f.terms) {
    Evaluation details = evaluate(group, term.exponents);
    RingElement contribution = ring.element(term.coefficient) * details.value;
    total = total + contribution;
    terms.push_back(TermEvaluation{term.coefficient, contribution, std::move(details)});
  }
  return PolynomialEvaluation{total, std::move(terms)};
}

}  // namespace symsum
