#include "nilclean/engine.hpp"

#include <vector>

#include "nilclean/canonical_form.hpp"

namespace nilclean {

namespace {

Gf2Matrix shift_matrix(std::size_t n) {
  Gf2Matrix s(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) s.set(i + 1, i, true);
  return s;
}

}  // namespace

CompanionCase classify_companion(const Gf2Poly& p) {
  const long deg = p.degree();
  if (deg < 1) throw std::invalid_argument("companion_nil_clean: polynomial must have degree >= 1");
  const auto n = static_cast<std::size_t>(deg);
  if (p.coeff(n - 1)) return CompanionCase::kTopCoefficientOne;
  if (n == 1) return CompanionCase::kLinear;
  if (p.coeff(n - 2)) return CompanionCase::kSecondCoefficientOne;
  if (n == 2) return CompanionCase::kSquare;
  return CompanionCase::kBothZero;
}

Gf2Cert companion_nil_clean(const Gf2Poly& p) {
  const CompanionCase kind = classify_companion(p);
  const auto n = static_cast<std::size_t>(p.degree());
  const Gf2Matrix c = companion(p);

  Gf2Matrix e(n, n);
  Gf2Matrix nil = shift_matrix(n);
  switch (kind) {
    case CompanionCase::kLinear:
    case CompanionCase::kSquare:
      // E = 0 and N is the companion itself.
      break;
    case CompanionCase::kTopCoefficientOne:
      for (std::size_t i = 0; i + 1 < n; ++i) e.set(i, n - 1, p.coeff(i));
      e.set(n - 1, n - 1, true);
      break;
    case CompanionCase::kSecondCoefficientOne:
      nil.set(n - 2, n - 2, true);
      nil.set(n - 2, n - 1, true);
      nil.set(n - 1, n - 1, true);
      for (std::size_t i = 0; i + 2 < n; ++i) e.set(i, n - 1, p.coeff(i));
      e.set(n - 2, n - 2, true);
      e.set(n - 1, n - 1, true);
      break;
    case CompanionCase::kBothZero:
      nil.set(n - 3, n - 2, true);
      nil.set(n - 3, n - 1, true);
      nil.set(n - 2, n - 2, true);
      nil.set(n - 1, n - 1, true);
      for (std::size_t i = 0; i + 3 < n; ++i) e.set(i, n - 1, p.coeff(i));
      e.set(n - 3, n - 2, true);
      e.set(n - 3, n - 1, !p.coeff(n - 3));
      e.set(n - 2, n - 2, true);
      e.set(n - 1, n - 1, true);
      break;
  }

  Gf2Cert cert = certify(c, std::move(e), std::move(nil), "companion_nil_clean");
  if (char_poly(cert.n_part) != Gf2Poly::monomial(n)) {
    throw VerificationError("companion_nil_clean: nilpotent part has wrong characteristic polynomial");
  }
  return cert;
}

Gf2Cert nil_clean_decompose(const Gf2Matrix& a) {
  if (!a.is_square()) throw DimensionError("nil_clean_decompose: matrix is not square");
  const FrobeniusForm form = frobenius_form(a);

  std::vector<Gf2Matrix> e_blocks;
  std::vector<Gf2Matrix> n_blocks;
  for (const auto& f : form.invariant_factors) {
    Gf2Cert block = companion_nil_clean(f);
    e_blocks.push_back(std::move(block.e_part));
    n_blocks.push_back(std::move(block.n_part));
  }
  const Gf2Matrix& p = form.transform;
  const Gf2Matrix p_inv = inverse(p);
  Gf2Matrix e = mul(p, mul(block_diagonal(e_blocks), p_inv));
  Gf2Matrix n = mul(p, mul(block_diagonal(n_blocks), p_inv));
  return certify(a, std::move(e), std::move(n), "nil_clean_decompose");
}

bool is_strongly_nil_clean(const Gf2Matrix& a) {
  return is_nilpotent(add(a, mul(a, a)));
}

Gf2StrongCert strongly_nil_clean_decompose(const Gf2Matrix& a) {
  if (!a.is_square()) throw DimensionError("strongly_nil_clean_decompose: matrix is not square");
  Gf2Matrix defect = add(a, mul(a, a));
  if (!is_nilpotent(defect)) throw NotStronglyNilCleanError(std::move(defect));

  Gf2Matrix e = a;
  for (std::size_t reach = 1; reach < a.rows(); reach *= 2) e = mul(e, e);
  Gf2Matrix n = add(a, e);
  Gf2StrongCert strong{certify(a, std::move(e), std::move(n), "strongly_nil_clean_decompose"), {}};
  strong.commuting_product = mul(strong.cert.e_part, strong.cert.n_part);
  if (strong.commuting_product != mul(strong.cert.n_part, strong.cert.e_part)) {
    throw VerificationError("strongly_nil_clean_decompose: parts do not commute");
  }
  return strong;
}

}  // namespace nilclean
