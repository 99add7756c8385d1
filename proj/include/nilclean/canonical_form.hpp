#pragma once

// Frobenius (rational canonical) form over F2 with an explicit similarity
// transform.

#include <vector>

#include "nilclean/gf2.hpp"
#include "nilclean/gf2_poly.hpp"

namespace nilclean {

struct FrobeniusForm {
  /// Invertible P with inverse(P) * A * P = blockdiag(companion(f_1), ..., companion(f_k)).
  Gf2Matrix transform;
  /// Invariant factors f_1 | f_2 | ... | f_k, degrees summing to n.
  std::vector<Gf2Poly> invariant_factors;
};

/// Companion matrix of a monic polynomial of degree n >= 1: ones on the
/// subdiagonal and the coefficients c_0..c_{n-1} down the last column.
/// Throws std::invalid_argument for the zero or a constant polynomial.
Gf2Matrix companion(const Gf2Poly& p);

/// Minimal polynomial of v under A: the monic p of least degree with p(A) v = 0.
Gf2Poly local_minimal_polynomial(const Gf2Matrix& a, const BitVector& v);

/// Deterministic: candidate vectors are scanned in standard-basis order and
/// every null-space basis is taken from the reduced row echelon form.
FrobeniusForm frobenius_form(const Gf2Matrix& a);

std::vector<Gf2Poly> invariant_factors(const Gf2Matrix& a);

/// det(tI - A), computed as the product of the invariant factors.
Gf2Poly char_poly(const Gf2Matrix& a);

/// Block-diagonal matrix of the companions of `factors`, in order.
Gf2Matrix frobenius_matrix(const std::vector<Gf2Poly>& factors);

}  // namespace nilclean
