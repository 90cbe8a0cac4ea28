#include "symsum/sums.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace symsum {

namespace {

constexpr std::size_t kMaxEnumeratedPositions = 16;  // family listing is exponential
constexpr std::size_t kMaxNaivePositions = 10;       // Bell(10) = 115975
constexpr std::size_t kMaxDpPositions = 20;

std::int64_t checked_lambda(std::int64_t lambda) {
  if (lambda < 1) throw std::invalid_argument("lambda must be positive");
  return lambda;
}

void sort_family(std::vector<Partition>& partitions) {
  for (Partition& p : partitions) p = canonical_partition(std::move(p));
  std::sort(partitions.begin(), partitions.end());
}

// Recursive family enumeration over an explicit position list. Positions
// whose residue sum is not divisible by lambda admit no partition at all.
void enumerate_family(const std::vector<std::size_t>& positions,
                      const std::vector<std::int64_t>& residues, std::int64_t lambda,
                      std::vector<Partition>& out) {
  if (positions.empty()) {
    out.push_back({});
    return;
  }
  std::int64_t total = 0;
  for (std::size_t p : positions) total = (total + residues[p]) % lambda;
  if (total != 0) return;

  out.push_back({positions});  // the one-block partition {X}

  // Y runs over nonempty divisible-sum subsets of X minus its first
  // position; the block containing that position is X \ Y.
  const std::vector<std::size_t> rest(positions.begin() + 1, positions.end());
  const std::size_t r = rest.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << r); ++mask) {
    std::vector<std::size_t> y;
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < r; ++i)
      if (mask >> i & 1) {
        y.push_back(rest[i]);
        sum = (sum + residues[rest[i]]) % lambda;
      }
    if (sum != 0) continue;
    std::vector<std::size_t> complement;
    for (std::size_t p : positions)
      if (!std::binary_search(y.begin(), y.end(), p)) complement.push_back(p);
    std::vector<Partition> inner;
    enumerate_family(y, residues, lambda, inner);
    for (Partition& z : inner) {
      z.push_back(complement);
      out.push_back(std::move(z));
    }
  }
}

}  // namespace

Int ExponentMultiset::subset_sum(std::span<const std::size_t> positions) const {
  Int sum = 0;
  for (std::size_t p : positions) {
    if (p >= exponents_.size())
      throw std::invalid_argument("subset position out of range");
    sum += exponents_[p];
  }
  return sum;
}

Int ExponentMultiset::total() const {
  Int sum = 0;
  for (const Int& a : exponents_) sum += a;
  return sum;
}

std::vector<std::int64_t> ExponentMultiset::residues(std::int64_t lambda) const {
  checked_lambda(lambda);
  std::vector<std::int64_t> out;
  out.reserve(exponents_.size());
  for (const Int& a : exponents_) out.push_back(mod_floor64(a, lambda));
  return out;
}

ExponentMultiset ExponentMultiset::without(std::size_t position) const {
  if (position >= exponents_.size())
    throw std::invalid_argument("position out of range");
  std::vector<Int> rest = exponents_;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(position));
  return ExponentMultiset(std::move(rest));
}

Partition canonical_partition(Partition partition) {
  for (auto& block : partition) std::sort(block.begin(), block.end());
  std::sort(partition.begin(), partition.end());
  return partition;
}

Reduction reduce(const ExponentMultiset& exponents, std::int64_t lambda,
                 std::int64_t group_order) {
  checked_lambda(lambda);
  const std::size_t k = exponents.size();
  if (static_cast<std::int64_t>(k) > group_order)
    throw std::invalid_argument("more positions than group elements");
  Reduction result;
  std::vector<Int> kept_exponents;
  const auto res = exponents.residues(lambda);
  for (std::size_t i = 0; i < k; ++i)
    if (res[i] != 0) {
      result.kept.push_back(i);
      kept_exponents.push_back(exponents.at(i));
    }
  result.reduced = ExponentMultiset(std::move(kept_exponents));
  result.prefactor = 1;
  for (std::int64_t j = static_cast<std::int64_t>(result.kept.size());
       j < static_cast<std::int64_t>(k); ++j)
    result.prefactor *= group_order - j;
  return result;
}

Int chi(std::size_t block_size, std::int64_t group_order) {
  if (block_size < 1) throw std::invalid_argument("block size must be positive");
  Int value = Int(group_order) * factorial(block_size - 1);
  return block_size % 2 == 0 ? -value : value;
}

PartitionFamily valid_partitions(const ExponentMultiset& exponents, std::int64_t lambda) {
  checked_lambda(lambda);
  if (exponents.size() > kMaxEnumeratedPositions)
    throw std::invalid_argument("too many positions for partition enumeration");
  std::vector<std::size_t> positions(exponents.size());
  for (std::size_t i = 0; i < positions.size(); ++i) positions[i] = i;
  std::vector<Partition> out;
  enumerate_family(positions, exponents.residues(lambda), lambda, out);
  sort_family(out);
  return PartitionFamily{std::move(out)};
}

PartitionFamily valid_partitions_naive(const ExponentMultiset& exponents,
                                       std::int64_t lambda) {
  checked_lambda(lambda);
  const std::size_t k = exponents.size();
  if (k > kMaxNaivePositions)
    throw std::invalid_argument("too many positions for naive partition enumeration");
  const auto res = exponents.residues(lambda);
  std::vector<Partition> out;
  if (k == 0) {
    out.push_back({});
    return PartitionFamily{std::move(out)};
  }
  // all set partitions via restricted growth strings
  std::vector<std::size_t> label(k, 0);
  while (true) {
    std::size_t blocks = *std::max_element(label.begin(), label.end()) + 1;
    Partition partition(blocks);
    for (std::size_t i = 0; i < k; ++i) partition[label[i]].push_back(i);
    bool good = true;
    for (const auto& block : partition) {
      std::int64_t sum = 0;
      for (std::size_t p : block) sum = (sum + res[p]) % lambda;
      if (sum != 0) {
        good = false;
        break;
      }
    }
    if (good) out.push_back(std::move(partition));

    // next restricted growth string
    std::size_t i = k;
    while (i-- > 1) {
      std::size_t prefix_max = *std::max_element(label.begin(), label.begin() + i);
      if (label[i] <= prefix_max) {
        ++label[i];
        std::fill(label.begin() + i + 1, label.end(), 0);
        break;
      }
      label[i] = 0;
    }
    if (i == 0) break;
  }
  sort_family(out);
  return PartitionFamily{std::move(out)};
}

namespace {

void require_no_divisible_exponent(const std::vector<std::int64_t>& residues) {
  for (std::int64_t r : residues)
    if (r == 0)
      throw std::invalid_argument(
          "exponent divisible by the group exponent; reduce first");
}

}  // namespace

Int closed_form_weight(const ExponentMultiset& exponents, std::int64_t lambda,
                       std::int64_t group_order) {
  checked_lambda(lambda);
  const std::size_t k = exponents.size();
  if (k > kMaxDpPositions)
    throw std::invalid_argument("too many positions for the subset DP");
  const auto res = exponents.residues(lambda);
  require_no_divisible_exponent(res);
  if (k == 0) return 1;

  std::vector<Int> chi_by_size(k + 1);
  for (std::size_t s = 1; s <= k; ++s) chi_by_size[s] = chi(s, group_order);

  const std::uint64_t full = (std::uint64_t(1) << k) - 1;
  std::vector<std::int64_t> sum_mod(full + 1, 0);
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    std::uint64_t low = mask & (~mask + 1);
    std::size_t idx = static_cast<std::size_t>(std::countr_zero(mask));
    sum_mod[mask] = (sum_mod[mask ^ low] + res[idx]) % lambda;
  }

  std::vector<Int> f(full + 1);
  f[0] = 1;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    std::uint64_t low = mask & (~mask + 1);
    Int acc = 0;
    // blocks P ⊆ mask containing the lowest position, with divisible sum
    for (std::uint64_t sub = mask; sub != 0; sub = (sub - 1) & mask) {
      if (!(sub & low) || sum_mod[sub] != 0) continue;
      acc += chi_by_size[static_cast<std::size_t>(std::popcount(sub))] * f[mask ^ sub];
    }
    f[mask] = std::move(acc);
  }
  return f[full];
}

Int closed_form_weight_enumerated(const ExponentMultiset& exponents, std::int64_t lambda,
                                  std::int64_t group_order) {
  require_no_divisible_exponent(exponents.residues(lambda));
  PartitionFamily family = valid_partitions(exponents, lambda);
  Int total = 0;
  for (const Partition& partition : family.partitions) {
    Int product = 1;
    for (const auto& block : partition) product *= chi(block.size(), group_order);
    total += product;
  }
  return total;
}

RingElement closed_form_p(const UnitSubgroup& group, const ExponentMultiset& exponents) {
  if (exponents.size() > group.size())
    throw std::invalid_argument("more positions than group elements");
  Int weight = closed_form_weight(exponents, group.exponent(),
                                  static_cast<std::int64_t>(group.size()));
  return group.ring().element(weight);
}

namespace {

// Per-position power tables: table[i][j] = elements[j] ^ a_i, with each
// exponent reduced mod the order of elements[j].
std::vector<std::vector<Int>> power_tables(const UnitSubgroup& group,
                                           const ExponentMultiset& exponents) {
  const Int& m = group.ring().modulus();
  const auto& elems = group.elements();
  const std::int64_t lambda = group.exponent();
  const auto res = exponents.residues(lambda);
  std::vector<std::vector<Int>> tables(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    tables[i].reserve(elems.size());
    for (const Int& g : elems) {
      std::int64_t r = res[i] % group.order_of(g);
      tables[i].push_back(pow_mod(g, Int(r), m));
    }
  }
  return tables;
}

template <typename Scalar, typename Mul, typename Add>
void injective_sum_rec(const std::vector<std::vector<Scalar>>& tables,
                       std::vector<char>& used, std::size_t pos, const Scalar& partial,
                       Scalar& sum, std::size_t skip, const Mul& mul, const Add& add) {
  if (pos == tables.size()) {
    sum = add(sum, partial);
    return;
  }
  const auto& row = tables[pos];
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (used[j] || j == skip) continue;
    used[j] = 1;
    injective_sum_rec(tables, used, pos + 1, mul(partial, row[j]), sum, skip, mul, add);
    used[j] = 0;
  }
}

RingElement brute_force_impl(const UnitSubgroup& group, const ExponentMultiset& exponents,
                             bool skip_identity, bool force_wide) {
  const std::size_t k = exponents.size();
  const std::size_t n = group.size();
  const std::size_t usable = n - (skip_identity ? 1 : 0);
  if (k > usable) return group.ring().zero();
  if (k == 0) return group.ring().one();

  const Int& m = group.ring().modulus();
  auto tables = power_tables(group, exponents);
  std::size_t skip = n;  // out of range: skip nothing
  if (skip_identity) {
    auto it = std::lower_bound(group.elements().begin(), group.elements().end(), Int(1));
    skip = static_cast<std::size_t>(it - group.elements().begin());
  }
  std::vector<char> used(n, 0);

  if (!force_wide && m <= std::numeric_limits<std::uint32_t>::max()) {
    const std::uint64_t mod = m.convert_to<std::uint64_t>();
    std::vector<std::vector<std::uint64_t>> small(k);
    for (std::size_t i = 0; i < k; ++i) {
      small[i].reserve(n);
      for (const Int& v : tables[i]) small[i].push_back(v.convert_to<std::uint64_t>());
    }
    std::uint64_t sum = 0;
    auto mul = [mod](std::uint64_t a, std::uint64_t b) {
      return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % mod);
    };
    auto add = [mod](std::uint64_t a, std::uint64_t b) {
      std::uint64_t s = a + b;
      return s >= mod ? s - mod : s;
    };
    injective_sum_rec(small, used, 0, std::uint64_t(1), sum, skip, mul, add);
    return group.ring().element(Int(sum));
  }

  Int sum = 0;
  auto mul = [&m](const Int& a, const Int& b) { return mod_floor(a * b, m); };
  auto add = [&m](const Int& a, const Int& b) { return mod_floor(a + b, m); };
  injective_sum_rec(tables, used, 0, Int(1), sum, skip, mul, add);
  return group.ring().element(sum);
}

}  // namespace

RingElement brute_force_p(const UnitSubgroup& group, const ExponentMultiset& exponents) {
  return brute_force_impl(group, exponents, /*skip_identity=*/false, /*force_wide=*/false);
}

RingElement brute_force_p_sharp(const UnitSubgroup& group,
                                const ExponentMultiset& exponents) {
  return brute_force_impl(group, exponents, /*skip_identity=*/true, /*force_wide=*/false);
}

namespace detail {
RingElement brute_force_p_wide(const UnitSubgroup& group, const ExponentMultiset& exponents,
                               bool skip_identity) {
  return brute_force_impl(group, exponents, skip_identity, /*force_wide=*/true);
}
}  // namespace detail

InclusionExclusionCheck check_inclusion_exclusion(const UnitSubgroup& group,
                                                  const ExponentMultiset& exponents) {
  const std::size_t k = exponents.size();
  if (k > 20)
    throw std::invalid_argument("too many positions for the subset identity check");
  RingElement lhs = brute_force_p_sharp(group, exponents);
  Int rhs = 0;
  const Int& m = group.ring().modulus();
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << k); ++mask) {
    std::vector<Int> subset;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) subset.push_back(exponents.at(i));
    const std::size_t missing = k - subset.size();
    Int coeff = factorial(missing);
    if (missing % 2 == 1) coeff = -coeff;
    rhs += coeff * brute_force_p(group, ExponentMultiset(std::move(subset))).value();
    rhs = mod_floor(rhs, m);
  }
  RingElement rhs_elem = group.ring().element(rhs);
  return InclusionExclusionCheck{lhs == rhs_elem, lhs, rhs_elem};
}

}  // namespace symsum
