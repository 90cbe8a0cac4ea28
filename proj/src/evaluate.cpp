#include "symsum/evaluate.hpp"

#include <stdexcept>

namespace symsum {

std::string method_name(Method method) {
  switch (method) {
    case Method::closed_form: return "closed_form";
    case Method::vanishing: return "vanishing";
    case Method::brute_force: return "brute_force";
  }
  throw std::invalid_argument("unknown method");
}

Evaluation evaluate(const UnitSubgroup& group, const ExponentMultiset& exponents,
                    bool force_closed_form) {
  if (exponents.size() > group.size())
    throw std::invalid_argument("more positions than group elements");

  const std::int64_t lambda = group.exponent();
  const std::int64_t n = static_cast<std::int64_t>(group.size());
  Reduction reduction = reduce(exponents, lambda, n);
  const ExponentMultiset& core = reduction.reduced;
  const ModRing& ring = group.ring();

  Evaluation result{ring.element(reduction.prefactor)};
  result.prefactor = reduction.prefactor;
  if (core.empty()) {
    result.method = Method::closed_form;
    result.nice = true;
    return result;
  }

  result.niceness = is_a_nice(group, core);
  result.nice = result.niceness->nice;
  const bool divisible_total = core.total() % lambda == 0;

  if (result.nice && !divisible_total) {
    result.method = Method::vanishing;
    result.value = ring.zero();
    return result;
  }
  if (result.nice || force_closed_form) {
    result.method = Method::closed_form;
    result.value = ring.element(reduction.prefactor * closed_form_weight(core, lambda, n));
    return result;
  }
  result.method = Method::brute_force;
  result.value = ring.element(reduction.prefactor) * brute_force_p(group, core);
  return result;
}

}  // namespace symsum
