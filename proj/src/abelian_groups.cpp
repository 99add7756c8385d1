#include "nilclean/abelian_groups.hpp"

#include <algorithm>
#include <utility>

#include "nilclean/engine.hpp"
#include "nilclean/mod2k.hpp"

namespace nilclean {

namespace {

// Maximal runs [begin, end) of equal exponents.
std::vector<std::pair<std::size_t, std::size_t>> homogeneous_blocks(const GroupEndo& f) {
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  std::size_t begin = 0;
  for (std::size_t i = 1; i <= f.size(); ++i) {
    if (i == f.size() || f.exponent(i) != f.exponent(begin)) {
      blocks.emplace_back(begin, i);
      begin = i;
    }
  }
  return blocks;
}

void require_compatible(const GroupEndo& a, const GroupEndo& b, const char* what) {
  if (!(a.group() == b.group())) throw DimensionError(std::string(what) + ": endomorphisms of different groups");
}

GroupEndo from_mod2k(const AbelianGroupSpec& g, const Mod2kMatrix& m) {
  GroupEndo f(g);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) f.set_reduced(i, j, m(i, j));
  }
  return f;
}

unsigned ceil_log2(std::size_t x) {
  unsigned r = 0;
  while ((std::size_t{1} << r) < x) ++r;
  return r;
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d <= p / d; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

AbelianGroupSpec::AbelianGroupSpec(std::vector<PrimePower> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("group must have at least one cyclic factor");
  for (const auto& f : factors_) {
    if (!is_prime(f.prime)) throw std::invalid_argument(std::to_string(f.prime) + " is not prime");
    if (f.exponent == 0) throw std::invalid_argument("cyclic factor exponent must be at least 1");
  }
  std::sort(factors_.begin(), factors_.end());
}

AbelianGroupSpec AbelianGroupSpec::from_orders(std::initializer_list<std::uint64_t> orders) {
  std::vector<PrimePower> factors;
  for (auto order : orders) {
    if (order < 2) throw std::invalid_argument("cyclic factor order must exceed 1");
    std::uint64_t p = 2;
    while (order % p != 0) ++p;
    unsigned k = 0;
    std::uint64_t rest = order;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    if (rest != 1) throw std::invalid_argument(std::to_string(order) + " is not a prime power");
    factors.push_back({p, k});
  }
  return AbelianGroupSpec(std::move(factors));
}

bool AbelianGroupSpec::is_two_group() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const PrimePower& f) { return f.prime == 2; });
}

std::vector<unsigned> AbelianGroupSpec::exponents() const {
  std::vector<unsigned> ks;
  for (const auto& f : factors_) ks.push_back(f.exponent);
  return ks;
}

std::string AbelianGroupSpec::to_string() const {
  std::string s = "group";
  for (const auto& f : factors_) s += " " + std::to_string(f.prime) + "^" + std::to_string(f.exponent);
  return s;
}

bool group_nil_clean_verdict(const AbelianGroupSpec& g) { return g.is_two_group(); }

bool group_strongly_nil_clean_verdict(const AbelianGroupSpec& g) {
  return g.rank() == 1 && g.is_two_group();
}

GroupEndo::GroupEndo(AbelianGroupSpec group) : group_(std::move(group)) {
  if (!group_.is_two_group()) throw NotTwoGroupError();
  exponents_ = group_.exponents();
  for (auto k : exponents_) {
    if (k > kMaxExponent) {
      throw std::invalid_argument("GroupEndo: exponent must be at most 60, got " + std::to_string(k));
    }
  }
  data_.assign(exponents_.size() * exponents_.size(), 0);
}

GroupEndo GroupEndo::identity(const AbelianGroupSpec& group) {
  GroupEndo f(group);
  for (std::size_t i = 0; i < f.size(); ++i) f.set(i, i, 1);
  return f;
}

GroupEndo GroupEndo::from_rows(const AbelianGroupSpec& group,
                               std::initializer_list<std::initializer_list<std::uint64_t>> rows) {
  GroupEndo f(group);
  if (rows.size() != f.size()) throw DimensionError("GroupEndo::from_rows: row count must equal rank");
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != f.size()) throw DimensionError("GroupEndo::from_rows: column count must equal rank");
    std::size_t j = 0;
    for (auto v : row) f.set(i, j++, v);
    ++i;
  }
  return f;
}

std::uint64_t GroupEndo::required_divisor(std::size_t i, std::size_t j) const {
  const unsigned ki = exponents_[i];
  const unsigned kj = exponents_[j];
  return ki > kj ? (std::uint64_t{1} << (ki - kj)) : 1;
}

void GroupEndo::set(std::size_t i, std::size_t j, std::uint64_t value) {
  const std::string where = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  if (value > row_mask(i)) {
    throw EndoConstraintError(i, j, where + " = " + std::to_string(value) + " is not reduced mod 2^" +
                                        std::to_string(exponents_[i]));
  }
  if (value % required_divisor(i, j) != 0) {
    throw EndoConstraintError(i, j, where + " = " + std::to_string(value) + " must be a multiple of " +
                                        std::to_string(required_divisor(i, j)));
  }
  data_[i * size() + j] = value;
}

bool GroupEndo::satisfies_constraints() const {
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      const auto v = (*this)(i, j);
      if (v > row_mask(i) || v % required_divisor(i, j) != 0) return false;
    }
  }
  return true;
}

bool GroupEndo::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint64_t v) { return v == 0; });
}

GroupEndo add(const GroupEndo& a, const GroupEndo& b) {
  require_compatible(a, b, "add");
  GroupEndo c(a.group());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) c.set_reduced(i, j, a(i, j) + b(i, j));
  }
  return c;
}

GroupEndo sub(const GroupEndo& a, const GroupEndo& b) {
  require_compatible(a, b, "sub");
  GroupEndo c(a.group());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) c.set_reduced(i, j, a(i, j) - b(i, j));
  }
  return c;
}

GroupEndo mul(const GroupEndo& a, const GroupEndo& b) {
  require_compatible(a, b, "mul");
  const std::size_t n = a.size();
  GroupEndo c(a.group());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t l = 0; l < n; ++l) acc += a(i, l) * b(l, j);
      c.set_reduced(i, j, acc);
    }
  }
  return c;
}

Gf2Matrix semisimple_reduction(const GroupEndo& f) {
  Gf2Matrix r(f.size(), f.size());
  for (const auto& [begin, end] : homogeneous_blocks(f)) {
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = begin; j < end; ++j) r.set(i, j, f(i, j) & 1U);
    }
  }
  return r;
}

bool is_unit(const GroupEndo& f) {
  const Gf2Matrix r = semisimple_reduction(f);
  for (const auto& [begin, end] : homogeneous_blocks(f)) {
    const std::size_t len = end - begin;
    if (rank(r.block(begin, begin, len, len)) != len) return false;
  }
  return true;
}

bool is_unipotent(const GroupEndo& f) {
  return is_nilpotent_in_ring(sub(f, GroupEndo::identity(f.group())));
}

std::optional<GroupEndo> strongly_witness(const AbelianGroupSpec& g) {
  if (!g.is_two_group() || g.rank() < 2) return std::nullopt;
  const auto ks = g.exponents();
  for (std::size_t i = 0; i + 1 < ks.size(); ++i) {
    if (ks[i] != ks[i + 1]) continue;
    GroupEndo w = GroupEndo::identity(g);
    w.set(i, i, 0);
    w.set(i, i + 1, 1);
    w.set(i + 1, i, 1);
    w.set(i + 1, i + 1, 1);
    if (!is_unit(w) || is_unipotent(w)) throw VerificationError("strongly_witness: witness property failed");
    return w;
  }
  return std::nullopt;
}

GroupCert endo_nil_clean_decompose(const GroupEndo& f) {
  if (!f.group().is_two_group()) throw NotTwoGroupError();
  const std::size_t n = f.size();
  const auto blocks = homogeneous_blocks(f);

  if (blocks.size() == 1) {
    Mod2kMatrix m(f.exponent(0), n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, f(i, j));
    }
    const Mod2kCert c = nil_clean_decompose_mod2k(m);
    return certify(f, from_mod2k(f.group(), c.e_part), from_mod2k(f.group(), c.n_part),
                   "endo_nil_clean_decompose");
  }

  const Gf2Matrix reduced = semisimple_reduction(f);
  GroupEndo e(f.group());
  for (const auto& [begin, end] : blocks) {
    const std::size_t len = end - begin;
    const Gf2Cert c = nil_clean_decompose(reduced.block(begin, begin, len, len));
    for (std::size_t i = 0; i < len; ++i) {
      for (std::size_t j = 0; j < len; ++j) e.set(begin + i, begin + j, c.e_part.get(i, j) ? 1 : 0);
    }
  }

  const unsigned cap = ceil_log2(nilpotency_bound(f)) + 1;
  for (unsigned step = 0; !(mul(e, e) == e); ++step) {
    if (step == cap) throw VerificationError("endo_nil_clean_decompose: idempotent lifting did not converge");
    const GroupEndo e2 = mul(e, e);
    const GroupEndo e3 = mul(e2, e);
    e = sub(add(add(e2, e2), e2), add(e3, e3));
    if (!e.satisfies_constraints()) throw VerificationError("endo_nil_clean_decompose: left End(G)");
  }
  GroupEndo nil = sub(f, e);
  if (!nil.satisfies_constraints()) throw VerificationError("endo_nil_clean_decompose: left End(G)");
  return certify(f, std::move(e), std::move(nil), "endo_nil_clean_decompose");
}

std::vector<GroupEndo> enumerate_endomorphisms(const AbelianGroupSpec& g, std::size_t limit) {
  GroupEndo f(g);
  const std::size_t n = f.size();
  // Entry (i, j) ranges over multiples of its required divisor below 2^{k_i}.
  std::vector<std::uint64_t> steps(n * n);
  std::vector<std::uint64_t> counts(n * n);
  long double total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      steps[i * n + j] = f.required_divisor(i, j);
      counts[i * n + j] = (f.row_mask(i) + 1) / steps[i * n + j];
      total *= static_cast<long double>(counts[i * n + j]);
    }
  }
  if (total > static_cast<long double>(limit)) throw std::length_error("enumerate_endomorphisms: too many endomorphisms");

  std::vector<GroupEndo> out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<std::uint64_t> digits(n * n, 0);
  while (true) {
    for (std::size_t c = 0; c < n * n; ++c) f.set_reduced(c / n, c % n, digits[c] * steps[c]);
    out.push_back(f);
    std::size_t c = n * n;
    while (c > 0) {
      --c;
      if (++digits[c] < counts[c]) break;
      digits[c] = 0;
      if (c == 0) return out;
    }
  }
}

}  // namespace nilclean
