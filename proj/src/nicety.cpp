#include "symsum/nicety.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

namespace symsum {

namespace {

constexpr std::size_t kMaxNicetyPositions = 20;

std::vector<std::size_t> mask_positions(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) out.push_back(i);
  return out;
}

}  // namespace

std::int64_t minimax_fast(const UnitSubgroup& group, const Int& subset_sum) {
  const std::int64_t lambda = group.exponent();
  const std::int64_t r = mod_floor64(subset_sum, lambda);
  return lambda / gcd64(r, lambda);
}

std::int64_t minimax_scan(const UnitSubgroup& group, const Int& subset_sum) {
  std::int64_t best = 0;
  for (const Int& g : group.elements()) {
    const std::int64_t d = group.order_of(g);
    best = std::max(best, d / gcd64(mod_floor64(subset_sum, d), d));
  }
  return best;
}

NicenessReport is_a_nice(const UnitSubgroup& group, const ExponentMultiset& exponents) {
  const std::size_t k = exponents.size();
  if (k > kMaxNicetyPositions)
    throw std::invalid_argument("too many positions for subset enumeration");

  const std::int64_t lambda = group.exponent();
  NicenessReport report;
  report.threshold = (group.ring().non_regular_count() + 1).convert_to<std::int64_t>();

  const auto res = exponents.residues(lambda);
  std::vector<std::int64_t> sum_mod(std::size_t(1) << k, 0);
  std::vector<char> seen(static_cast<std::size_t>(lambda), 0);
  bool have_min = false;
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << k); ++mask) {
    const std::uint64_t low = mask & (~mask + 1);
    const std::size_t idx = static_cast<std::size_t>(std::countr_zero(mask));
    const std::int64_t r = (sum_mod[mask ^ low] + res[idx]) % lambda;
    sum_mod[mask] = r;
    if (r == 0 || seen[static_cast<std::size_t>(r)]) continue;
    seen[static_cast<std::size_t>(r)] = 1;
    ++report.family_size;
    const std::int64_t value = lambda / gcd64(r, lambda);
    if (!have_min || value < report.worst_value) {
      have_min = true;
      report.worst_value = value;
      report.worst_subset = mask_positions(mask);
    }
  }
  report.vacuous = !have_min;
  report.nice = report.vacuous || report.worst_value >= report.threshold;
  return report;
}

std::optional<VanishingWitness> vanishing_witness(const UnitSubgroup& group, const Int& t) {
  const ModRing& ring = group.ring();
  auto regular_shift = [&](const RingElement& power) {
    return ring.is_regular(power + (-ring.one()));
  };
  // Powers of a maximal-order element g: candidate bases g^j give powers
  // (g^t)^j, walked by repeated multiplication.
  const RingElement g = ring.element(group.max_order_element());
  const RingElement gt = group.pow(g, t);
  RingElement base = g;
  RingElement power = gt;
  for (std::int64_t j = 1; j <= group.exponent(); ++j) {
    if (regular_shift(power)) return VanishingWitness{base, power};
    base = base * g;
    power = power * gt;
  }
  for (const Int& value : group.elements()) {
    RingElement candidate = ring.element(value);
    RingElement candidate_power = group.pow(candidate, t);
    if (regular_shift(candidate_power))
      return VanishingWitness{candidate, candidate_power};
  }
  return std::nullopt;
}

namespace {

void require_positive(const Int& value, const char* what) {
  if (value < 1) throw std::invalid_argument(std::string(what) + " must be positive");
}

}  // namespace

bool example1_condition(const Int& p, const Int& m, const Int& q,
                        const ExponentMultiset& exponents) {
  if (p < 3 || p % 2 == 0 || !is_probable_prime(p))
    throw std::invalid_argument("p must be an odd prime");
  require_positive(m, "m");
  require_positive(q, "q");
  if (m > 4096) throw std::invalid_argument("m too large");

  const unsigned exponent_m = m.convert_to<unsigned>();
  Int pm = 1;  // p^(m-1)
  for (unsigned i = 1; i < exponent_m; ++i) pm *= p;
  const Int phi = pm * (p - 1);
  const Int g = gcd(q, phi);
  const Int lambda = phi / g;

  if (exponents.total() % lambda != 0) return false;

  const std::size_t k = exponents.size();
  if (k > kMaxNicetyPositions)
    throw std::invalid_argument("too many positions for subset enumeration");
  const Int pp1 = p * (p - 1);
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t(1) << k); ++mask) {
    Int s = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) s += exponents.at(i);
    // gcd(s, p(p-1)) < (p-1)/g, cross-multiplied to stay in integers
    if (gcd(s, pp1) * g >= p - 1) return false;
  }
  return true;
}

bool example2_condition(const Int& p, const Int& q, const ExponentMultiset& exponents) {
  if (!is_probable_prime(p)) throw std::invalid_argument("p must be prime");
  if (!is_probable_prime(q)) throw std::invalid_argument("q must be prime");
  if (p == q) throw std::invalid_argument("p and q must be distinct");
  if (p <= 11 || q <= 11) throw std::invalid_argument("p and q must exceed 11");
  if ((q + 1) % (p - 1) != 0)
    throw std::invalid_argument("p - 1 must divide q + 1");

  const std::size_t k = exponents.size();
  if (k > kMaxNicetyPositions)
    throw std::invalid_argument("too many positions for subset enumeration");
  const Int half_phi = (p - 1) * (q - 1) / 2;
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t(1) << k); ++mask) {
    Int s = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) s += exponents.at(i);
    const Int g1 = gcd(s, p - 1);
    const Int g2 = gcd(s, q - 1);
    // g1 g2 > pq / (3(p+q)) cross-multiplied; when it holds the subset sum
    // must be a multiple of phi(pq)/2
    if (3 * (p + q) * g1 * g2 > p * q && s % half_phi != 0) return false;
  }
  return true;
}

}  // namespace symsum
