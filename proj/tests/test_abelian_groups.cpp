#include "doctest.h"

#include <random>

#include "nilclean/abelian_groups.hpp"
#include "nilclean/engine.hpp"
#include "nilclean/mod2k.hpp"

using namespace nilclean;

namespace {

void check_group_cert(const GroupEndo& f, const GroupCert& c) {
  CHECK(mul(c.e_part, c.e_part) == c.e_part);
  CHECK(add(c.e_part, c.n_part) == f);
  CHECK(c.e_part.satisfies_constraints());
  CHECK(c.n_part.satisfies_constraints());
  GroupEndo p = c.n_part;
  for (std::size_t e = 1; e < nilpotency_bound(f); ++e) p = mul(p, c.n_part);
  CHECK(p.is_zero());
  CHECK(verify_cert(f, c));
}

GroupEndo random_endo(std::mt19937_64& rng, const AbelianGroupSpec& g) {
  GroupEndo f(g);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < f.size(); ++j) f.set(i, j, (rng() * f.required_divisor(i, j)) & f.row_mask(i));
  }
  return f;
}

}  // namespace

TEST_CASE("group specs are validated and sorted") {
  const auto g = AbelianGroupSpec::from_orders({8, 3, 2});
  CHECK(g.to_string() == "group 2^1 2^3 3^1");
  CHECK(g.rank() == 3);
  CHECK_FALSE(g.is_two_group());
  CHECK_THROWS_AS(AbelianGroupSpec::from_orders({6}), std::invalid_argument);
  CHECK_THROWS_AS(AbelianGroupSpec::from_orders({1}), std::invalid_argument);
  CHECK_THROWS_AS(AbelianGroupSpec(std::vector<PrimePower>{}), std::invalid_argument);
  CHECK_THROWS_AS(AbelianGroupSpec({PrimePower{4, 1}}), std::invalid_argument);
}

TEST_CASE("verdicts") {
  CHECK(group_nil_clean_verdict(AbelianGroupSpec::from_orders({2, 4})));
  CHECK_FALSE(group_nil_clean_verdict(AbelianGroupSpec::from_orders({3})));
  CHECK(group_nil_clean_verdict(AbelianGroupSpec::from_orders({2, 2, 8})));
  CHECK(group_strongly_nil_clean_verdict(AbelianGroupSpec::from_orders({8})));
  CHECK_FALSE(group_strongly_nil_clean_verdict(AbelianGroupSpec::from_orders({2, 2})));
  CHECK_FALSE(group_strongly_nil_clean_verdict(AbelianGroupSpec::from_orders({5})));

  struct Row {
    std::initializer_list<std::uint64_t> orders;
    bool nil_clean;
    bool strongly;
  };
  for (const Row& row : {Row{{2}, true, true}, Row{{2, 4}, true, false}, Row{{8}, true, true},
                         Row{{2, 2}, true, false}, Row{{3}, false, false}}) {
    const auto g = AbelianGroupSpec::from_orders(row.orders);
    CHECK(group_nil_clean_verdict(g) == row.nil_clean);
    CHECK(group_strongly_nil_clean_verdict(g) == row.strongly);
  }
}

TEST_CASE("strongly_witness") {
  const auto w = strongly_witness(AbelianGroupSpec::from_orders({2, 2}));
  REQUIRE(w.has_value());
  CHECK(*w == GroupEndo::from_rows(AbelianGroupSpec::from_orders({2, 2}), {{0, 1}, {1, 1}}));
  CHECK(is_unit(*w));
  CHECK_FALSE(is_unipotent(*w));

  CHECK_FALSE(strongly_witness(AbelianGroupSpec::from_orders({4})).has_value());

  const auto w3 = strongly_witness(AbelianGroupSpec::from_orders({2, 2, 2}));
  REQUIRE(w3.has_value());
  CHECK(*w3 == GroupEndo::from_rows(AbelianGroupSpec::from_orders({2, 2, 2}), {{0, 1, 0}, {1, 1, 0}, {0, 0, 1}}));
  CHECK(is_unit(*w3));
  CHECK_FALSE(is_unipotent(*w3));

  const auto g = AbelianGroupSpec::from_orders({2, 8, 8});
  const auto wg = strongly_witness(g);
  REQUIRE(wg.has_value());
  CHECK(wg->satisfies_constraints());
  CHECK(is_unit(*wg));
  CHECK_FALSE(is_unipotent(*wg));
  CHECK_FALSE(is_strongly_nil_clean(semisimple_reduction(*wg)));
}

TEST_CASE("strong verdict implies no witness") {
  for (auto orders : {std::initializer_list<std::uint64_t>{2}, {4}, {1024}}) {
    const auto g = AbelianGroupSpec::from_orders(orders);
    CHECK(group_strongly_nil_clean_verdict(g));
    CHECK_FALSE(strongly_witness(g).has_value());
  }
}

TEST_CASE("distinct exponents leave no unit witness") {
  // End(Z/2 + Z/4) modulo its radical is F2 x F2, so every f - f^2 is nilpotent.
  const auto g = AbelianGroupSpec::from_orders({2, 4});
  CHECK_FALSE(strongly_witness(g).has_value());
  const auto all = enumerate_endomorphisms(g);
  for (const auto& f : all) CHECK(is_nilpotent_in_ring(sub(f, mul(f, f))));
}

TEST_CASE("endomorphism constraints") {
  const auto g = AbelianGroupSpec::from_orders({2, 4});
  GroupEndo f(g);
  CHECK(f.required_divisor(1, 0) == 2);
  CHECK(f.required_divisor(0, 1) == 1);
  CHECK_THROWS_AS(f.set(1, 0, 1), EndoConstraintError);
  CHECK_THROWS_AS(f.set(0, 0, 2), EndoConstraintError);
  f.set(1, 0, 2);
  CHECK(f(1, 0) == 2);
  CHECK_THROWS_AS(GroupEndo(AbelianGroupSpec::from_orders({3})), NotTwoGroupError);
  try {
    GroupEndo::from_rows(g, {{1, 1}, {1, 1}});
    FAIL("expected EndoConstraintError");
  } catch (const EndoConstraintError& e) {
    CHECK(e.row() == 1);
    CHECK(e.col() == 0);
  }
}

TEST_CASE("thirty-two endomorphisms of Z/2 + Z/4") {
  const auto g = AbelianGroupSpec::from_orders({2, 4});
  const auto all = enumerate_endomorphisms(g);
  CHECK(all.size() == 2 * 2 * 2 * 4);
  for (const auto& f : all) {
    CHECK(f.satisfies_constraints());
    check_group_cert(f, endo_nil_clean_decompose(f));
  }
}

TEST_CASE("composition preserves constraints") {
  std::mt19937_64 rng(51);
  const auto g = AbelianGroupSpec::from_orders({2, 4, 4, 32, 1024});
  for (int trial = 0; trial < 200; ++trial) {
    const GroupEndo a = random_endo(rng, g);
    const GroupEndo b = random_endo(rng, g);
    CHECK(mul(a, b).satisfies_constraints());
    CHECK(add(a, b).satisfies_constraints());
    CHECK(sub(a, b).satisfies_constraints());
  }
}

TEST_CASE("composition is associative and matches the enumeration") {
  const auto g = AbelianGroupSpec::from_orders({2, 4});
  const auto all = enumerate_endomorphisms(g);
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 300; ++trial) {
    const auto& a = all[rng() % all.size()];
    const auto& b = all[rng() % all.size()];
    const auto& c = all[rng() % all.size()];
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
  }
}

TEST_CASE("endo_nil_clean_decompose examples") {
  const auto mixed = AbelianGroupSpec::from_orders({2, 4});
  const auto f = GroupEndo::from_rows(mixed, {{0, 1}, {0, 0}});
  const GroupCert c = endo_nil_clean_decompose(f);
  CHECK(c.e_part.is_zero());
  CHECK(c.n_part == f);
  CHECK(mul(f, f).is_zero());

  const auto homogeneous = AbelianGroupSpec::from_orders({4, 4});
  const GroupCert h = endo_nil_clean_decompose(GroupEndo::from_rows(homogeneous, {{3, 0}, {0, 1}}));
  CHECK(h.e_part == GroupEndo::identity(homogeneous));
  CHECK(h.n_part == GroupEndo::from_rows(homogeneous, {{2, 0}, {0, 0}}));

  for (auto orders : {std::initializer_list<std::uint64_t>{2}, {2, 4}, {8, 8, 2}, {4, 16, 64}}) {
    const auto g = AbelianGroupSpec::from_orders(orders);
    const GroupCert id = endo_nil_clean_decompose(GroupEndo::identity(g));
    CHECK(id.e_part == GroupEndo::identity(g));
    CHECK(id.n_part.is_zero());
  }
}

TEST_CASE("homogeneous groups agree with the Z/2^k path") {
  std::mt19937_64 rng(53);
  const auto g = AbelianGroupSpec::from_orders({8, 8, 8});
  for (int trial = 0; trial < 50; ++trial) {
    const GroupEndo f = random_endo(rng, g);
    Mod2kMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) m.set(i, j, f(i, j));
    }
    const GroupCert c = endo_nil_clean_decompose(f);
    const Mod2kCert d = nil_clean_decompose_mod2k(m);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) CHECK(c.e_part(i, j) == d.e_part(i, j));
    }
  }
}

TEST_CASE("mixed groups decompose on random endomorphisms") {
  std::mt19937_64 rng(54);
  for (auto orders : {std::initializer_list<std::uint64_t>{2, 4}, {2, 2, 8}, {2, 4, 4, 16}, {2, 8, 8, 1024, 1024}}) {
    const auto g = AbelianGroupSpec::from_orders(orders);
    for (int trial = 0; trial < 200; ++trial) {
      const GroupEndo f = random_endo(rng, g);
      check_group_cert(f, endo_nil_clean_decompose(f));
    }
  }
}

TEST_CASE("enumeration refuses huge rings") {
  CHECK_THROWS_AS(enumerate_endomorphisms(AbelianGroupSpec::from_orders({1024, 1024, 1024})), std::length_error);
}
