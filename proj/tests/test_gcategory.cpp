#include <catch2/catch_amalgamated.hpp>

#include "hofix/gcategory.hpp"
#include "hofix/group.hpp"

using namespace hofix;

namespace {

// C3 with C2 acting by inversion (the unit group of the degree-2 field
// extension of F2, with its automorphism).
GCategory c3_inversion() {
  FiniteGroup C3 = make_cyclic_group(3);
  FiniteGroup C2 = make_cyclic_group(2);
  std::vector<std::vector<int>> act(2, std::vector<int>(3));
  for (int x = 0; x < 3; ++x) {
    act[0][x] = x;
    act[1][x] = C3.inv(x);
  }
  return group_as_gcategory(C3, C2, act);
}

}  // namespace

TEST_CASE("chaotic categories validate and are contractible", "[gcategory]") {
  Budget b;
  for (int m : {2, 3}) {
    GCategory ch = make_chaotic(make_cyclic_group(m));
    validate_gcategory(ch, b);
    CHECK(ch.cat.nobj == m);
    CHECK(ch.cat.nmor() == m * m);
    CHECK(num_iso_classes(ch.cat) == 1);
  }
}

TEST_CASE("fixed subcategories pick out strictly invariant data", "[gcategory]") {
  Budget b;
  FiniteGroup C2 = make_cyclic_group(2);

  // free translation action: no fixed objects at the full group
  GCategory ch = make_chaotic(C2);
  CHECK(fixed_subcategory(ch, {0, 1}).cat.nobj == 0);

  // the trivial subgroup fixes everything
  SubcatView all = fixed_subcategory(ch, {0});
  CHECK(all.cat.nobj == ch.cat.nobj);
  CHECK(all.cat.nmor() == ch.cat.nmor());

  // swapping a discrete pair leaves nothing fixed
  GCategory D = discrete_gcategory(2, C2, {{0, 1}, {1, 0}});
  validate_gcategory(D, b);
  CHECK(fixed_subcategory(D, {0, 1}).cat.nobj == 0);

  // a trivial action fixes everything
  GCategory T = trivial_action_gcategory(discrete_category(3), C2);
  validate_gcategory(T, b);
  CHECK(fixed_subcategory(T, {0, 1}).cat.nobj == 3);
}

TEST_CASE("group categories carry the action on morphisms", "[gcategory]") {
  Budget b;
  GCategory C = c3_inversion();
  validate_gcategory(C, b);
  CHECK(C.cat.nobj == 1);
  CHECK(C.cat.nmor() == 3);
  // the nontrivial group element acts by inversion, an involution
  for (int f = 0; f < 3; ++f) CHECK(C.mact(1, C.mact(1, f)) == f);
  CHECK(C.mact(1, 1) == 2);
}

TEST_CASE("corrupted action data is reported", "[gcategory]") {
  GCategory C = c3_inversion();
  CHECK_FALSE(gcategory_violation(C).has_value());

  // break the action law on morphisms: inversion must send x to x^2
  GCategory bad = C;
  bad.mor_act[1][1] = 1;
  CHECK(gcategory_violation(bad).has_value());

  // wrong table sizes are rejected up front
  GCategory small = C;
  small.obj_act.pop_back();
  CHECK(gcategory_violation(small).has_value());
}

TEST_CASE("equivariance violations are detected", "[gcategory]") {
  FiniteGroup C2 = make_cyclic_group(2);
  GCategory D = discrete_gcategory(2, C2, {{0, 1}, {1, 0}});

  Functor id = identity_functor(D.cat);
  CHECK_FALSE(equivariance_violation(D, D, id).has_value());

  // the constant functor at object 0 is a functor but does not commute
  // with the swap
  Functor c0;
  c0.ob = {0, 0};
  c0.mor = {D.cat.idm[0], D.cat.idm[0]};
  CHECK_FALSE(functor_violation(D.cat, D.cat, c0).has_value());
  CHECK(equivariance_violation(D, D, c0).has_value());
}

TEST_CASE("the identity functor is a weak equivalence at every subgroup",
          "[gcategory]") {
  GCategory C = c3_inversion();
  auto rep = check_weak_g_equivalence_surrogate(C, C, identity_functor(C.cat));
  CHECK(rep.ok());
  // one row per subgroup of C2
  CHECK(rep.rows.size() == 2u);
  for (const auto& r : rep.rows) CHECK(r.report.ok());
}

TEST_CASE("the maximal subgroupoid keeps exactly the isomorphisms",
          "[gcategory]") {
  Budget b;

  // a poset has only identity isomorphisms
  std::vector<std::vector<bool>> leq = {{true, true}, {false, true}};
  GCategory P =
      trivial_action_gcategory(poset_category(leq), make_cyclic_group(2));
  IsoSubGCategory IP = iso_gcategory(P);
  validate_gcategory(IP.C, b);
  CHECK(IP.C.cat.nobj == 2);
  CHECK(IP.C.cat.nmor() == 2);

  // a chaotic category is already a groupoid
  GCategory ch = make_chaotic(make_cyclic_group(2));
  IsoSubGCategory IC = iso_gcategory(ch);
  validate_gcategory(IC.C, b);
  CHECK(IC.C.cat.nmor() == ch.cat.nmor());

  // a one-object group category is a groupoid too
  GCategory G1 = c3_inversion();
  CHECK(iso_gcategory(G1).C.cat.nmor() == 3);
}
