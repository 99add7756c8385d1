#include "doctest.h"

#include <random>

#include "nilclean/canonical_form.hpp"
#include "nilclean/gf2.hpp"
#include "nilclean/gf2_poly.hpp"
#include "nilclean/oracle.hpp"
#include "support.hpp"

using namespace nilclean;
using testing_support::random_matrix;
using testing_support::reference_mul;
using testing_support::reference_rank;

namespace {

const Gf2Matrix kOrderThree = Gf2Matrix::from_rows({{0, 1}, {1, 1}});
const Gf2Matrix kAllOnes = Gf2Matrix::from_rows({{1, 1}, {1, 1}});

}  // namespace

TEST_CASE("add is entrywise xor") {
  CHECK(add(Gf2Matrix::identity(2), Gf2Matrix::identity(2)).is_zero());
  CHECK(add(kOrderThree, Gf2Matrix::from_rows({{0, 0}, {1, 0}})) == Gf2Matrix::from_rows({{0, 1}, {0, 1}}));
  CHECK(add(kOrderThree, Gf2Matrix::zero(2)) == kOrderThree);
  CHECK_THROWS_AS(add(Gf2Matrix(2, 2), Gf2Matrix(2, 3)), DimensionError);
}

TEST_CASE("mul matches hand computation") {
  CHECK(mul(kOrderThree, kOrderThree) == Gf2Matrix::from_rows({{1, 1}, {1, 0}}));
  CHECK(reference_mul(kOrderThree, kOrderThree) == Gf2Matrix::from_rows({{1, 1}, {1, 0}}));
  CHECK(mul(kAllOnes, kAllOnes).is_zero());
  const Gf2Matrix a = Gf2Matrix::from_rows({{1, 0, 1}, {0, 1, 1}, {1, 1, 0}});
  CHECK(mul(Gf2Matrix::identity(3), a) == a);
  CHECK_THROWS_AS(mul(Gf2Matrix(2, 3), Gf2Matrix(2, 3)), DimensionError);
}

TEST_CASE("mul agrees with the triple loop across word boundaries") {
  std::mt19937_64 rng(11);
  for (std::size_t n : {1, 5, 63, 64, 65, 130}) {
    const Gf2Matrix a = random_matrix(rng, n, n + 3);
    const Gf2Matrix b = random_matrix(rng, n + 3, n + 1);
    CHECK(mul(a, b) == reference_mul(a, b));
  }
}

TEST_CASE("matrix_power") {
  CHECK(matrix_power(kAllOnes, 2).is_zero());
  CHECK(matrix_power(kOrderThree, 0) == Gf2Matrix::identity(2));
  CHECK(matrix_power(kOrderThree, 3) == Gf2Matrix::identity(2));
  CHECK(matrix_power(kOrderThree, 2) == mul(kOrderThree, kOrderThree));
  CHECK_THROWS_AS(matrix_power(Gf2Matrix(2, 3), 2), DimensionError);
}

TEST_CASE("rank") {
  CHECK(rank(Gf2Matrix::identity(7)) == 7);
  CHECK(rank(kAllOnes) == 1);
  CHECK(rank(Gf2Matrix::zero(5)) == 0);
  CHECK(rank(Gf2Matrix(3, 70)) == 0);
}

TEST_CASE("rank agrees with a naive elimination up to n = 128") {
  std::mt19937_64 rng(12);
  for (std::size_t n = 1; n <= 128; n += 9) {
    Gf2Matrix a = random_matrix(rng, n);
    if (n > 2) {
      // force dependencies so ranks below n are exercised
      for (std::size_t j = 0; j < n; ++j) a.set(n - 1, j, a.get(0, j) ^ a.get(1, j));
    }
    CHECK(rank(a) == reference_rank(a));
    const Gf2Matrix wide = random_matrix(rng, n / 2 + 1, n + 7);
    CHECK(rank(wide) == reference_rank(wide));
  }
}

TEST_CASE("inverse") {
  const Gf2Matrix swap = Gf2Matrix::from_rows({{0, 1}, {1, 0}});
  CHECK(inverse(swap) == swap);
  CHECK(inverse(Gf2Matrix::identity(4)) == Gf2Matrix::identity(4));
  CHECK_THROWS_AS(inverse(kAllOnes), SingularMatrixError);
  CHECK_THROWS_AS(inverse(Gf2Matrix(2, 3)), DimensionError);
}

TEST_CASE("inverse succeeds exactly when rank is full") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 70;
    const Gf2Matrix a = random_matrix(rng, n);
    if (rank(a) == n) {
      const Gf2Matrix b = inverse(a);
      CHECK(mul(a, b).is_identity());
      CHECK(mul(b, a).is_identity());
    } else {
      CHECK_THROWS_AS(inverse(a), SingularMatrixError);
    }
  }
}

TEST_CASE("char_poly examples") {
  CHECK(char_poly(Gf2Matrix::zero(2)) == Gf2Poly::monomial(2));
  const Gf2Poly p = Gf2Poly::from_exponents({2, 1, 0});
  CHECK(char_poly(companion(p)) == p);
  const Gf2Matrix case2 = Gf2Matrix::from_rows({{0, 0, 0}, {1, 1, 1}, {0, 1, 1}});
  CHECK(char_poly(case2) == Gf2Poly::monomial(3));
  CHECK(matrix_power(case2, 3).is_zero());
}

TEST_CASE("is_idempotent and is_nilpotent examples") {
  CHECK(is_idempotent(Gf2Matrix::from_rows({{0, 1}, {0, 1}})));
  CHECK(is_idempotent(Gf2Matrix::identity(3)));
  CHECK_FALSE(is_idempotent(kOrderThree));
  CHECK(is_nilpotent(Gf2Matrix::from_rows({{0, 0}, {1, 0}})));
  CHECK_FALSE(is_nilpotent(Gf2Matrix::identity(2)));
  CHECK(is_nilpotent(kAllOnes));
}

TEST_CASE("three nilpotency routes agree exhaustively for n <= 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
      const Gf2Matrix a = oracle::decode(code, n);
      const bool by_power = matrix_power(a, n).is_zero();
      CHECK(is_nilpotent(a) == by_power);
      CHECK((char_poly(a) == Gf2Poly::monomial(n)) == by_power);
      CHECK(char_poly(a) == testing_support::reference_char_poly(a));
    }
  }
}

TEST_CASE("three nilpotency routes agree on random matrices up to n = 64") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 64;
    Gf2Matrix a = random_matrix(rng, n);
    if (trial % 2 == 0) {
      // strictly lower triangular, conjugated: nilpotent but not obviously so
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) a.set(i, j, false);
      }
      const Gf2Matrix q = testing_support::random_invertible(rng, n);
      a = mul(mul(q, a), inverse(q));
    }
    const bool by_power = matrix_power(a, n).is_zero();
    CHECK(is_nilpotent(a) == by_power);
    CHECK((char_poly(a) == Gf2Poly::monomial(n)) == by_power);
    if (trial % 2 == 0) CHECK(by_power);
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial * 3 % 90;
    const Gf2Matrix a = random_matrix(rng, n);
    const Gf2Matrix b = random_matrix(rng, n);
    const Gf2Matrix c = random_matrix(rng, n);
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    CHECK(mul(add(a, b), c) == add(mul(a, c), mul(b, c)));
    CHECK(add(a, a).is_zero());
    CHECK(transpose(mul(a, b)) == mul(transpose(b), transpose(a)));
  }
}

TEST_CASE("from_rows rejects malformed input") {
  CHECK_THROWS_AS(Gf2Matrix::from_rows({{0, 2}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Gf2Matrix::from_rows({{0, 1}, {1}}), DimensionError);
}

TEST_CASE("null_space and solve") {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 75;
    Gf2Matrix a = random_matrix(rng, n);
    if (n > 1) {
      for (std::size_t i = 0; i < n; ++i) a.set(i, n - 1, a.get(i, 0));
    }
    const auto kernel = null_space(a);
    CHECK(kernel.size() == n - rank(a));
    for (const auto& v : kernel) CHECK(mul(a, v).is_zero());

    BitVector x(n);
    for (std::size_t i = 0; i < n; ++i) x.set(i, rng() & 1U);
    const BitVector b = mul(a, x);
    CHECK(mul(a, solve(a, b)) == b);
  }
  CHECK_THROWS_AS(solve(Gf2Matrix::zero(2), BitVector::unit(2, 0)), SingularMatrixError);
}

TEST_CASE("polynomial arithmetic") {
  const Gf2Poly a = Gf2Poly::from_exponents({3, 1, 0});
  const Gf2Poly b = Gf2Poly::from_exponents({1, 0});
  CHECK(a.to_string() == "t^3 + t + 1");
  CHECK(Gf2Poly().to_string() == "0");
  CHECK(Gf2Poly().degree() == -1);
  CHECK((b * b) == Gf2Poly::from_exponents({2, 0}));
  const auto [q, r] = divmod(a * b + Gf2Poly::one(), b);
  CHECK(q == a);
  CHECK(r == Gf2Poly::one());
  CHECK(gcd(a * b, b * b) == b);
  CHECK(divides(b, a * b));
  CHECK_FALSE(divides(b, a));
  CHECK_THROWS_AS(divmod(a, Gf2Poly()), std::domain_error);
  CHECK(evaluate(Gf2Poly::from_exponents({2, 1, 0}), kOrderThree).is_zero());
}
