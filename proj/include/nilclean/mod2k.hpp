#pragma once

// Square matrices over Z/2^k and nil-clean decomposition by lifting
// idempotents from F2 along the nil ideal 2R.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "nilclean/certificate.hpp"
#include "nilclean/gf2.hpp"

namespace nilclean {

/// Entries are stored reduced into [0, 2^k). Arithmetic runs in wrapping
/// 64-bit words and is masked afterwards; 2^k divides 2^64, so the result is
/// exact modulo 2^k.
class Mod2kMatrix {
 public:
  static constexpr unsigned kMaxExponent = 60;

  Mod2kMatrix() = default;
  /// Zero matrix; throws std::invalid_argument unless 1 <= k <= 60.
  Mod2kMatrix(unsigned k, std::size_t n);

  static Mod2kMatrix identity(unsigned k, std::size_t n);
  /// Entries must already lie in [0, 2^k).
  static Mod2kMatrix from_rows(unsigned k, std::initializer_list<std::initializer_list<std::uint64_t>> rows);

  unsigned exponent() const { return k_; }
  std::size_t size() const { return n_; }
  std::uint64_t mask() const { return mask_; }

  std::uint64_t operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  /// Stores value mod 2^k.
  void set(std::size_t i, std::size_t j, std::uint64_t value) { data_[i * n_ + j] = value & mask_; }

  bool is_zero() const;
  friend bool operator==(const Mod2kMatrix&, const Mod2kMatrix&) = default;

 private:
  unsigned k_ = 1;
  std::size_t n_ = 0;
  std::uint64_t mask_ = 1;
  std::vector<std::uint64_t> data_;
};

Mod2kMatrix add(const Mod2kMatrix& a, const Mod2kMatrix& b);
Mod2kMatrix sub(const Mod2kMatrix& a, const Mod2kMatrix& b);
Mod2kMatrix mul(const Mod2kMatrix& a, const Mod2kMatrix& b);
/// c * a entrywise.
Mod2kMatrix scale(std::uint64_t c, const Mod2kMatrix& a);

/// N^n lies in 2R and (2R)^k = 0, so n * k bounds every nilpotency index.
inline std::size_t nilpotency_bound(const Mod2kMatrix& a) { return a.size() * a.exponent(); }

/// Entrywise parity: the quotient map onto M_n(F2).
Gf2Matrix reduce_mod2(const Mod2kMatrix& a);
/// The {0,1} representative of an F2 matrix inside M_n(Z/2^k).
Mod2kMatrix lift_binary(const Gf2Matrix& a, unsigned k);

/// Iterates e <- 3e^2 - 2e^3 exactly ceil(log2 k) times; each step at least
/// doubles the 2-adic valuation of e^2 - e. Requires reduce_mod2(e0) to be
/// idempotent (std::invalid_argument otherwise); the result is idempotent and
/// congruent to e0 mod 2.
Mod2kMatrix lift_idempotent(const Mod2kMatrix& e0);

using Mod2kCert = NilCleanCert<Mod2kMatrix>;

/// Decomposes the mod-2 reduction over F2, lifts its idempotent, and takes
/// N = a - E.
Mod2kCert nil_clean_decompose_mod2k(const Mod2kMatrix& a);

/// ceil(log2 k), the iteration count used by lift_idempotent.
unsigned lifting_steps(unsigned k);

}  // namespace nilclean
