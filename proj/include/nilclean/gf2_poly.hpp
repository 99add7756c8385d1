#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "nilclean/gf2.hpp"

namespace nilclean {

/// Polynomial over F2. Bit i of the packed storage is the coefficient of t^i;
/// storage is trimmed so the zero polynomial holds no words.
class Gf2Poly {
 public:
  Gf2Poly() = default;

  static Gf2Poly one() { return monomial(0); }
  static Gf2Poly monomial(std::size_t degree);
  /// Polynomial with a 1 at each listed exponent (repeats cancel).
  static Gf2Poly from_exponents(std::initializer_list<std::size_t> exponents);
  /// Coefficients listed from t^0 upward.
  static Gf2Poly from_coefficients(const std::vector<int>& coeffs);

  bool is_zero() const { return words_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  long degree() const;
  bool coeff(std::size_t i) const;
  void set_coeff(std::size_t i, bool value);

  Gf2Poly& operator+=(const Gf2Poly& other);
  friend Gf2Poly operator+(Gf2Poly a, const Gf2Poly& b) { return a += b; }
  friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b);
  friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

  /// Renders as e.g. "t^3 + t + 1"; the zero polynomial renders as "0".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Word> words_;
};

/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<Gf2Poly, Gf2Poly> divmod(const Gf2Poly& a, const Gf2Poly& b);
inline Gf2Poly operator/(const Gf2Poly& a, const Gf2Poly& b) { return divmod(a, b).first; }
inline Gf2Poly operator%(const Gf2Poly& a, const Gf2Poly& b) { return divmod(a, b).second; }
inline bool divides(const Gf2Poly& d, const Gf2Poly& a) { return (a % d).is_zero(); }
Gf2Poly gcd(Gf2Poly a, Gf2Poly b);

/// Largest divisor of a all of whose irreducible factors also divide s.
Gf2Poly supported_part(Gf2Poly a, const Gf2Poly& s);

/// p(A) v by Horner's rule.
BitVector evaluate(const Gf2Poly& p, const Gf2Matrix& a, const BitVector& v);
/// p(A) by Horner's rule.
Gf2Matrix evaluate(const Gf2Poly& p, const Gf2Matrix& a);

}  // namespace nilclean
