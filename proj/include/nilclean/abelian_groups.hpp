#pragma once

// Finite-rank abelian groups: (strong) nil-clean verdicts, and nil-clean
// decompositions in End(G) for finite abelian 2-groups G = ⊕ Z/2^{k_i}.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilclean/certificate.hpp"
#include "nilclean/gf2.hpp"

namespace nilclean {

struct PrimePower {
  std::uint64_t prime = 2;
  unsigned exponent = 1;

  friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

/// G = ⊕ Z/p^k, stored sorted by prime then exponent.
class AbelianGroupSpec {
 public:
  /// Throws std::invalid_argument on an empty list, a non-prime base or a
  /// zero exponent.
  explicit AbelianGroupSpec(std::vector<PrimePower> factors);

  /// Cyclic factors given by their orders, e.g. {2, 4} for Z/2 ⊕ Z/4. Each
  /// order must be a prime power greater than 1.
  static AbelianGroupSpec from_orders(std::initializer_list<std::uint64_t> orders);

  const std::vector<PrimePower>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  bool is_two_group() const;
  /// Exponents k_1 <= ... <= k_n; meaningful for 2-groups.
  std::vector<unsigned> exponents() const;

  /// "group 2^1 2^2" form.
  std::string to_string() const;

  friend bool operator==(const AbelianGroupSpec&, const AbelianGroupSpec&) = default;

 private:
  std::vector<PrimePower> factors_;
};

bool is_prime(std::uint64_t p);

/// End(G) is nil-clean iff G is a finite 2-group.
bool group_nil_clean_verdict(const AbelianGroupSpec& g);
/// Strong verdict: true iff G is a cyclic 2-group.
bool group_strongly_nil_clean_verdict(const AbelianGroupSpec& g);

/// Reports the offending entry of an ill-defined endomorphism matrix.
class EndoConstraintError : public std::invalid_argument {
 public:
  EndoConstraintError(std::size_t row, std::size_t col, const std::string& what)
      : std::invalid_argument(what), row_(row), col_(col) {}
  std::size_t row() const { return row_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

class NotTwoGroupError : public std::domain_error {
 public:
  NotTwoGroupError() : std::domain_error("group is not a 2-group") {}
};

/// Endomorphism of G = ⊕ Z/2^{k_i}. Entry (i, j) is a residue mod 2^{k_i}
/// describing Z/2^{k_j} -> Z/2^{k_i}, x -> entry * x; it is well defined iff
/// the entry is a multiple of 2^{max(0, k_i - k_j)}.
class GroupEndo {
 public:
  static constexpr unsigned kMaxExponent = 60;

  GroupEndo() = default;
  /// Zero endomorphism. Throws NotTwoGroupError for other groups and
  /// std::invalid_argument when an exponent exceeds 60.
  explicit GroupEndo(AbelianGroupSpec group);

  static GroupEndo identity(const AbelianGroupSpec& group);
  static GroupEndo from_rows(const AbelianGroupSpec& group,
                             std::initializer_list<std::initializer_list<std::uint64_t>> rows);

  const AbelianGroupSpec& group() const { return group_; }
  std::size_t size() const { return exponents_.size(); }
  unsigned exponent(std::size_t i) const { return exponents_[i]; }
  std::uint64_t row_mask(std::size_t i) const { return (std::uint64_t{1} << exponents_[i]) - 1; }

  std::uint64_t operator()(std::size_t i, std::size_t j) const { return data_[i * size() + j]; }
  /// Validates range and divisibility; throws EndoConstraintError.
  void set(std::size_t i, std::size_t j, std::uint64_t value);
  /// Stores value mod 2^{k_i} without the divisibility check.
  void set_reduced(std::size_t i, std::size_t j, std::uint64_t value) {
    data_[i * size() + j] = value & row_mask(i);
  }

  /// Multiple of 2^{max(0, k_i - k_j)} required at (i, j).
  std::uint64_t required_divisor(std::size_t i, std::size_t j) const;
  bool satisfies_constraints() const;
  bool is_zero() const;

  friend bool operator==(const GroupEndo&, const GroupEndo&) = default;

 private:
  AbelianGroupSpec group_{{PrimePower{}}};
  std::vector<unsigned> exponents_;
  std::vector<std::uint64_t> data_;
};

GroupEndo add(const GroupEndo& a, const GroupEndo& b);
GroupEndo sub(const GroupEndo& a, const GroupEndo& b);
/// Composition a ∘ b.
GroupEndo mul(const GroupEndo& a, const GroupEndo& b);

/// |G| = 2^(Σ k_i) bounds the length of the strictly decreasing chain
/// G ⊋ N G ⊋ N^2 G ⊋ ..., and Σ k_i <= n * k_n.
inline std::size_t nilpotency_bound(const GroupEndo& f) {
  return f.size() * (f.size() == 0 ? 0 : f.exponent(f.size() - 1));
}

/// Block-diagonal F2 matrix of the exponent-homogeneous diagonal blocks taken
/// mod 2; off-diagonal blocks are dropped.
Gf2Matrix semisimple_reduction(const GroupEndo& f);

/// f is invertible iff every homogeneous diagonal block is invertible mod 2.
bool is_unit(const GroupEndo& f);
/// True iff f - 1 is nilpotent.
bool is_unipotent(const GroupEndo& f);

/// A unit that is not unipotent, certifying End(G) is not strongly nil-clean.
/// Embeds the order-3 unit [[0,1],[1,1]] on the first pair of equal
/// exponents, identity elsewhere. None for rank 1, for non-2-groups, and when
/// all exponents are distinct (then every unit of End(G) is unipotent).
std::optional<GroupEndo> strongly_witness(const AbelianGroupSpec& g);

using GroupCert = NilCleanCert<GroupEndo>;

/// Homogeneous groups delegate to Z/2^k; mixed groups decompose the
/// semisimple reduction blockwise over F2 and lift the idempotent by
/// e <- 3e^2 - 2e^3 until exact. Throws NotTwoGroupError.
GroupCert endo_nil_clean_decompose(const GroupEndo& f);

/// Every endomorphism of a 2-group, in row-major odometer order. Throws
/// std::length_error when there are more than `limit`.
std::vector<GroupEndo> enumerate_endomorphisms(const AbelianGroupSpec& g, std::size_t limit = 1U << 20);

}  // namespace nilclean
