#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "hofix/gring.hpp"
#include "hofix/h1.hpp"

using namespace hofix;

namespace {

Budget big_budget() {
  Budget b;
  b.max_ops = 500'000'000;
  return b;
}

}  // namespace

TEST_CASE("unit cocycles over field extensions all trivialize", "[h1]") {
  Budget b = big_budget();

  // quadratic extension of F2, rank 1: three cocycles, one class
  Hilbert90Report r1 = verify_hilbert90(2, 2, 1, 1, b);
  CHECK(r1.gl_order == 3);
  CHECK(r1.cocycle_count == 3);
  CHECK(r1.class_count == 1);
  CHECK(r1.trivial());

  // same extension, rank 2: thirty cocycles, still one class
  Hilbert90Report r2 = verify_hilbert90(2, 2, 1, 2, b);
  CHECK(r2.gl_order == 180);
  CHECK(r2.cocycle_count == 30);
  CHECK(r2.class_count == 1);

  // quadratic extension of F3, rank 1
  Hilbert90Report r3 = verify_hilbert90(3, 2, 1, 1, b);
  CHECK(r3.gl_order == 8);
  CHECK(r3.cocycle_count == 4);
  CHECK(r3.class_count == 1);

  // cubic extension of F2, rank 1: a cyclic group of order 3 acting
  Hilbert90Report r4 = verify_hilbert90(2, 3, 1, 1, b);
  CHECK(r4.gl_order == 7);
  CHECK(r4.cocycle_count == 7);
  CHECK(r4.class_count == 1);
}

TEST_CASE("oversized general linear groups are refused up front", "[h1]") {
  Budget b = big_budget();
  // rank 2 over the degree-4 extension of F2: |GL| = 61200 > 10000
  CHECK_THROWS_MATCHES(
      verify_hilbert90(2, 4, 1, 2, b), Error,
      Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring(
          "too large for cocycle enumeration")));
}

TEST_CASE("the crossed morphism category coincides with homotopy fixed "
          "points on every battery instance",
          "[h1]") {
  Budget b = big_budget();
  for (const auto& ni : h1_battery_instances()) {
    CAPTURE(ni.name);
    CHECK(crossed_matches_hofix(ni.W, b));
  }
}

TEST_CASE("unit-of-exponential equivalence is equivalent to vanishing "
          "twisted classes, across the battery",
          "[h1]") {
  Budget b = big_budget();
  auto battery = h1_battery_instances();
  REQUIRE(battery.size() == 12u);
  int nontrivial = 0;
  for (const auto& ni : battery) {
    CAPTURE(ni.name);
    IotaH1Report rep = iota_equivalence_check(ni.W, b);
    CHECK(rep.biconditional_holds);
    // both ambient groups in the battery have prime order: two subgroups
    CHECK(rep.rows.size() == 2u);
    if (rep.any_nontrivial_h1) ++nontrivial;
    for (const auto& row : rep.rows) {
      CAPTURE(row.subgroup.size());
      CHECK(row.iota_equivalence == row.h1_trivial);
      // the trivial subgroup always has trivial classes
      if (row.subgroup.size() == 1u) CHECK(row.h1_trivial);
    }
  }
  CHECK(nontrivial == 7);
}

TEST_CASE("unit groups of the standard instances feed the same biconditional",
          "[h1]") {
  Budget b = big_budget();

  // units of the quadratic extension of F2 with Frobenius: classes vanish,
  // so the unit functor is an equivalence at every subgroup
  GGroup W4 = unit_group_ggroup(make_galois_gring(2, 2, 1));
  IotaH1Report r4 = iota_equivalence_check(W4, b);
  CHECK(r4.biconditional_holds);
  CHECK_FALSE(r4.any_nontrivial_h1);
  for (const auto& row : r4.rows) CHECK(row.iota_equivalence);

  // units of F3 with the trivial involution: nontrivial classes at the
  // full group, and the unit functor fails exactly there
  GGroup W3 = unit_group_ggroup(
      make_trivial_gring(make_prime_field(3), make_cyclic_group(2)));
  IotaH1Report r3 = iota_equivalence_check(W3, b);
  CHECK(r3.biconditional_holds);
  CHECK(r3.any_nontrivial_h1);
  for (const auto& row : r3.rows) {
    if (row.subgroup.size() == 2u) {
      CHECK_FALSE(row.h1_trivial);
      CHECK_FALSE(row.iota_equivalence);
    }
  }
}
