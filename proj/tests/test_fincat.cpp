#include <catch2/catch_amalgamated.hpp>

#include "hofix/fincat.hpp"
#include "hofix/gcategory.hpp"

using namespace hofix;

TEST_CASE("poset categories validate and compose transitively", "[fincat]") {
  // the square lattice: bottom, two incomparable midpoints, top
  std::vector<std::vector<bool>> leq = {{true, true, true, true},
                                        {false, true, false, true},
                                        {false, false, true, true},
                                        {false, false, false, true}};
  FinCat P = poset_category(leq);
  P.validate();
  CHECK(P.nobj == 4);
  CHECK(P.nmor() == 9);  // 4 identities + 5 strict relations
  // at most one morphism per ordered pair, and hom(a,b) nonempty iff a <= b
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      CHECK(P.hom(a, b).size() == (leq[a][b] ? 1u : 0u));
  // composing non-composable morphisms throws with a witness
  int up = P.hom(0, 1)[0], other = P.hom(2, 3)[0];
  CHECK_THROWS_AS(P.compose(up, other), Error);
}

TEST_CASE("iso detection and iso classes in a chaotic category", "[fincat]") {
  FinCat C = make_chaotic(make_cyclic_group(3)).cat;
  C.validate();
  for (int f = 0; f < C.nmor(); ++f) {
    CHECK(C.is_iso(f));
    REQUIRE(C.inverse_of(f).has_value());
  }
  CHECK(num_iso_classes(C) == 1);
  // poset categories have only identity isos
  std::vector<std::vector<bool>> leq = {{true, true}, {false, true}};
  FinCat P = poset_category(leq);
  CHECK(num_iso_classes(P) == 2);
  CHECK_FALSE(P.is_iso(P.hom(0, 1)[0]));
}

TEST_CASE("connected components see zigzags, not just direct arrows", "[fincat]") {
  // 0 -> 2 <- 1 plus isolated 3: two components
  FinCat C;
  C.nobj = 4;
  for (int a = 0; a < 4; ++a) {
    C.src.push_back(a);
    C.tgt.push_back(a);
    C.idm.push_back(a);
  }
  C.src.push_back(0);
  C.tgt.push_back(2);
  C.src.push_back(1);
  C.tgt.push_back(2);
  for (int a = 0; a < 4; ++a) C.comp[{a, a}] = a;
  C.comp[{4, 0}] = 4;
  C.comp[{2, 4}] = 4;
  C.comp[{5, 1}] = 5;
  C.comp[{2, 5}] = 5;
  C.validate();
  auto comp = connected_components(C);
  CHECK(comp[0] == comp[1]);
  CHECK(comp[0] == comp[2]);
  CHECK(comp[0] != comp[3]);
}

TEST_CASE("functor composition and identity behave", "[fincat]") {
  FinCat C = make_chaotic(make_cyclic_group(2)).cat;
  Functor id = identity_functor(C);
  CHECK_FALSE(functor_violation(C, C, id).has_value());
  Functor idid = compose_functors(id, id);
  CHECK(idid.ob == id.ob);
  CHECK(idid.mor == id.mor);
  // a broken assignment is caught
  Functor bad = id;
  bad.mor[C.idm[0]] = C.hom(0, 1)[0];
  CHECK(functor_violation(C, C, bad).has_value());
}

TEST_CASE("equivalence checking sees fullness, faithfulness, and surjectivity",
          "[fincat]") {
  // chaotic on two objects is equivalent to the point
  FinCat C2 = make_chaotic(make_cyclic_group(2)).cat;
  FinCat pt = make_chaotic(make_cyclic_group(1)).cat;
  Functor F;
  F.ob = {0, 0};
  F.mor = {0, 0, 0, 0};
  EquivReport rep = check_equivalence(C2, pt, F);
  CHECK(rep.ok());
  // the point into a discrete pair is not essentially surjective
  FinCat two;
  two.nobj = 2;
  two.src = {0, 1};
  two.tgt = {0, 1};
  two.idm = {0, 1};
  two.comp[{0, 0}] = 0;
  two.comp[{1, 1}] = 1;
  two.validate();
  Functor inc;
  inc.ob = {0};
  inc.mor = {0};
  EquivReport rep2 = check_equivalence(pt, two, inc);
  CHECK(rep2.full);
  CHECK(rep2.faithful);
  CHECK_FALSE(rep2.essentially_surjective);
  CHECK_FALSE(rep2.ok());
}

TEST_CASE("natural isomorphism detects iso-shifted functors", "[fincat]") {
  FinCat C = make_chaotic(make_cyclic_group(2)).cat;
  Functor id = identity_functor(C);
  // the constant-at-0 endofunctor of a chaotic category is isomorphic to id
  Functor c0;
  c0.ob = {0, 0};
  c0.mor.assign(C.nmor(), C.idm[0]);
  CHECK_FALSE(functor_violation(C, C, c0).has_value());
  CHECK(naturally_isomorphic(C, C, id, c0));
}
