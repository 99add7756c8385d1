#pragma once

// Nil-clean and strongly nil-clean decompositions over F2.

#include <stdexcept>
#include <utility>

#include "nilclean/certificate.hpp"
#include "nilclean/gf2.hpp"
#include "nilclean/gf2_poly.hpp"

namespace nilclean {

using Gf2Cert = NilCleanCert<Gf2Matrix>;
using Gf2StrongCert = StrongCert<Gf2Matrix>;

/// Which recipe decomposed a companion block.
enum class CompanionCase {
  kLinear,             // n = 1, p = t
  kTopCoefficientOne,  // c_{n-1} = 1: shift plus last-column idempotent
  kSecondCoefficientOne,  // c_{n-1} = 0, c_{n-2} = 1
  kBothZero,           // c_{n-1} = c_{n-2} = 0, n >= 3
  kSquare,             // p = t^2
};

CompanionCase classify_companion(const Gf2Poly& p);

/// (E, N) with E + N = companion(p), E idempotent and char_poly(N) = t^n.
Gf2Cert companion_nil_clean(const Gf2Poly& p);

/// Decomposes any square matrix over F2: reduce to Frobenius form, split each
/// companion block, conjugate back.
Gf2Cert nil_clean_decompose(const Gf2Matrix& a);

/// True iff a + a^2 is nilpotent.
bool is_strongly_nil_clean(const Gf2Matrix& a);

class NotStronglyNilCleanError : public std::domain_error {
 public:
  explicit NotStronglyNilCleanError(Gf2Matrix witness)
      : std::domain_error("matrix is not strongly nil-clean"), witness_(std::move(witness)) {}
  /// a + a^2, which is not nilpotent.
  const Gf2Matrix& witness() const { return witness_; }

 private:
  Gf2Matrix witness_;
};

/// E = a^(2^m) for the least m with 2^m >= n, N = a + E.
/// Throws NotStronglyNilCleanError when is_strongly_nil_clean(a) is false.
Gf2StrongCert strongly_nil_clean_decompose(const Gf2Matrix& a);

}  // namespace nilclean
