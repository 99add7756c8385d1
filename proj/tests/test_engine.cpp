#include "doctest.h"

#include <random>

#include "nilclean/canonical_form.hpp"
#include "nilclean/engine.hpp"
#include "nilclean/oracle.hpp"
#include "support.hpp"

using namespace nilclean;

namespace {

Gf2Poly poly(std::initializer_list<std::size_t> exponents) { return Gf2Poly::from_exponents(exponents); }

void check_cert(const Gf2Matrix& a, const Gf2Cert& c) {
  CHECK(is_idempotent(c.e_part));
  CHECK(add(c.e_part, c.n_part) == a);
  CHECK(matrix_power(c.n_part, a.rows()).is_zero());
  CHECK(verify_cert(a, c));
}

}  // namespace

TEST_CASE("top coefficient one at n = 2") {
  const Gf2Cert c = companion_nil_clean(poly({2, 1, 0}));
  CHECK(c.e_part == Gf2Matrix::from_rows({{0, 1}, {0, 1}}));
  CHECK(c.n_part == Gf2Matrix::from_rows({{0, 0}, {1, 0}}));
  CHECK(c.nilpotency_index == 2);
  CHECK(classify_companion(poly({2, 1, 0})) == CompanionCase::kTopCoefficientOne);
}

TEST_CASE("second coefficient one at n = 3") {
  const Gf2Cert c = companion_nil_clean(poly({3, 1, 0}));
  CHECK(c.e_part == Gf2Matrix::from_rows({{0, 0, 1}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(c.n_part == Gf2Matrix::from_rows({{0, 0, 0}, {1, 1, 1}, {0, 1, 1}}));
  CHECK(c.nilpotency_index == 3);
  CHECK(classify_companion(poly({3, 1, 0})) == CompanionCase::kSecondCoefficientOne);
}

TEST_CASE("both top coefficients zero at n = 3") {
  const Gf2Cert c = companion_nil_clean(poly({3, 0}));
  CHECK(c.e_part == Gf2Matrix::from_rows({{0, 1, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(c.n_part == Gf2Matrix::from_rows({{0, 1, 1}, {1, 1, 0}, {0, 1, 1}}));
  CHECK(c.nilpotency_index == 3);
  CHECK(classify_companion(poly({3, 0})) == CompanionCase::kBothZero);
}

TEST_CASE("boundary polynomials") {
  const Gf2Cert t = companion_nil_clean(poly({1}));
  CHECK(t.e_part == Gf2Matrix::from_rows({{0}}));
  CHECK(t.n_part == Gf2Matrix::from_rows({{0}}));
  CHECK(t.nilpotency_index == 1);
  CHECK(classify_companion(poly({1})) == CompanionCase::kLinear);

  const Gf2Cert t1 = companion_nil_clean(poly({1, 0}));
  CHECK(t1.e_part == Gf2Matrix::from_rows({{1}}));
  CHECK(t1.n_part.is_zero());

  const Gf2Cert sq = companion_nil_clean(poly({2}));
  CHECK(sq.e_part.is_zero());
  CHECK(sq.n_part == companion(poly({2})));
  CHECK(classify_companion(poly({2})) == CompanionCase::kSquare);

  // t^2 + 1: the second-coefficient recipe degenerates to E = I, N = all ones
  const Gf2Cert deg = companion_nil_clean(poly({2, 0}));
  CHECK(deg.e_part == Gf2Matrix::identity(2));
  CHECK(deg.n_part == Gf2Matrix::from_rows({{1, 1}, {1, 1}}));

  CHECK_THROWS_AS(companion_nil_clean(Gf2Poly::one()), std::invalid_argument);
}

TEST_CASE("every companion of degree <= 8 decomposes with char poly t^n") {
  std::size_t seen[5] = {};
  for (std::size_t d = 1; d <= 8; ++d) {
    for (const auto& p : testing_support::monic_polynomials(d)) {
      const Gf2Cert c = companion_nil_clean(p);
      check_cert(companion(p), c);
      CHECK(char_poly(c.n_part) == Gf2Poly::monomial(d));
      ++seen[static_cast<int>(classify_companion(p))];
    }
  }
  for (auto count : seen) CHECK(count > 0);
}

TEST_CASE("nil_clean_decompose examples") {
  for (std::size_t n : {1, 4, 65}) {
    const Gf2Cert z = nil_clean_decompose(Gf2Matrix::zero(n));
    CHECK(z.e_part.is_zero());
    CHECK(z.n_part.is_zero());
    CHECK(z.nilpotency_index == 1);
    const Gf2Cert i = nil_clean_decompose(Gf2Matrix::identity(n));
    CHECK(i.e_part.is_identity());
    CHECK(i.n_part.is_zero());
    CHECK(i.nilpotency_index == 1);
  }
  const Gf2Cert c = nil_clean_decompose(Gf2Matrix::from_rows({{0, 1}, {1, 1}}));
  CHECK(c.e_part == Gf2Matrix::from_rows({{0, 1}, {0, 1}}));
  CHECK(c.n_part == Gf2Matrix::from_rows({{0, 0}, {1, 0}}));
  CHECK_THROWS_AS(nil_clean_decompose(Gf2Matrix(2, 3)), DimensionError);
}

TEST_CASE("verify_cert examples") {
  const Gf2Matrix a = Gf2Matrix::from_rows({{0, 1}, {1, 1}});
  CHECK(verify_cert(a, Gf2Cert{Gf2Matrix::from_rows({{0, 1}, {0, 1}}), Gf2Matrix::from_rows({{0, 0}, {1, 0}}), 2}));
  CHECK_FALSE(verify_cert(Gf2Matrix::identity(2), Gf2Cert{Gf2Matrix::zero(2), Gf2Matrix::identity(2), 1}));
  CHECK(verify_cert(Gf2Matrix::zero(2), Gf2Cert{Gf2Matrix::zero(2), Gf2Matrix::zero(2), 1}));
  // wrong index claim, wrong sum, wrong shape
  CHECK_FALSE(verify_cert(a, Gf2Cert{Gf2Matrix::from_rows({{0, 1}, {0, 1}}), Gf2Matrix::from_rows({{0, 0}, {1, 0}}), 3}));
  CHECK_FALSE(verify_cert(a, Gf2Cert{Gf2Matrix::zero(2), Gf2Matrix::from_rows({{0, 0}, {1, 0}}), 2}));
  CHECK_FALSE(verify_cert(a, Gf2Cert{Gf2Matrix::zero(3), Gf2Matrix::zero(3), 1}));
}

TEST_CASE("nilpotency index is exact") {
  for (std::size_t n = 1; n <= 70; n += 3) {
    Gf2Matrix shift(n, n);
    for (std::size_t i = 1; i < n; ++i) shift.set(i, i - 1, true);
    CHECK(nilpotency_index(shift) == n);
    CHECK(nilpotency_index(matrix_power(shift, 2)) == (n + 1) / 2);
  }
  CHECK_FALSE(nilpotency_index(Gf2Matrix::identity(3)).has_value());
}

TEST_CASE("totality exhaustively for n <= 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
      const Gf2Matrix a = oracle::decode(code, n);
      check_cert(a, nil_clean_decompose(a));
    }
  }
}

TEST_CASE("totality on random matrices") {
  std::mt19937_64 rng(31);
  for (std::size_t n : {4, 8, 16, 64}) {
    const int trials = n == 64 ? 500 : 3000;
    for (int trial = 0; trial < trials; ++trial) {
      const Gf2Matrix a = testing_support::random_matrix(rng, n);
      const Gf2Cert c = nil_clean_decompose(a);
      REQUIRE(verify_cert(a, c));
    }
  }
}

TEST_CASE("certificates survive conjugation") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 40;
    const Gf2Matrix a = testing_support::random_matrix(rng, n);
    const Gf2Cert c = nil_clean_decompose(a);
    const Gf2Matrix q = testing_support::random_invertible(rng, n);
    const Gf2Matrix qi = inverse(q);
    auto conj = [&](const Gf2Matrix& m) { return mul(mul(qi, m), q); };
    CHECK(verify_cert(conj(a), Gf2Cert{conj(c.e_part), conj(c.n_part), c.nilpotency_index}));
  }
}

TEST_CASE("is_strongly_nil_clean examples") {
  CHECK(is_strongly_nil_clean(Gf2Matrix::from_rows({{0, 1}, {1, 0}})));
  CHECK_FALSE(is_strongly_nil_clean(Gf2Matrix::from_rows({{0, 1}, {1, 1}})));
  CHECK(is_strongly_nil_clean(Gf2Matrix::from_rows({{1, 1}, {1, 1}})));
  CHECK(is_strongly_nil_clean(Gf2Matrix::from_rows({{0, 0, 0}, {1, 1, 1}, {0, 1, 1}})));
}

TEST_CASE("strongly_nil_clean_decompose examples") {
  const Gf2StrongCert s = strongly_nil_clean_decompose(Gf2Matrix::from_rows({{0, 1}, {1, 0}}));
  CHECK(s.cert.e_part == Gf2Matrix::identity(2));
  CHECK(s.cert.n_part == Gf2Matrix::from_rows({{1, 1}, {1, 1}}));
  CHECK(verify_strong_cert(Gf2Matrix::from_rows({{0, 1}, {1, 0}}), s));

  const Gf2StrongCert id = strongly_nil_clean_decompose(Gf2Matrix::identity(5));
  CHECK(id.cert.e_part.is_identity());
  CHECK(id.cert.n_part.is_zero());

  try {
    strongly_nil_clean_decompose(Gf2Matrix::from_rows({{0, 1}, {1, 1}}));
    FAIL("expected NotStronglyNilCleanError");
  } catch (const NotStronglyNilCleanError& e) {
    CHECK(e.witness() == Gf2Matrix::identity(2));
  }
}

TEST_CASE("strong decomposition on random strongly nil-clean matrices") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 50;
    // idempotent plus a nilpotent polynomial in it: E + E N0 E style products commute with E
    const Gf2Cert base = nil_clean_decompose(testing_support::random_matrix(rng, n));
    const Gf2Matrix& e = base.e_part;
    const Gf2Matrix a = add(e, mul(mul(e, base.n_part), e));
    if (!is_strongly_nil_clean(a)) continue;
    const Gf2StrongCert s = strongly_nil_clean_decompose(a);
    CHECK(verify_strong_cert(a, s));
  }
}

TEST_CASE("units are strongly nil-clean iff unipotent") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 12;
    Gf2Matrix a = testing_support::random_invertible(rng, n);
    if (trial % 2 == 0) {
      Gf2Matrix upper = Gf2Matrix::identity(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) upper.set(i, j, rng() & 1U);
      }
      a = mul(mul(a, upper), inverse(a));
    }
    CHECK(is_strongly_nil_clean(a) == is_nilpotent(add(a, Gf2Matrix::identity(n))));
  }
}
