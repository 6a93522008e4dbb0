#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <string>
#include <vector>

#include "hofix/group.hpp"
#include "hofix/random_instances.hpp"
#include "hofix/rectify.hpp"

using namespace hofix;

namespace {

Budget big_budget() {
  Budget b;
  b.max_ops = 500'000'000;
  return b;
}

// The square lattice 0 < {1, 2} < 3 with the swap of the two midpoints.
GCategory swapped_lattice() {
  FiniteGroup C2 = make_cyclic_group(2);
  std::vector<std::vector<bool>> leq = {{true, true, true, true},
                                        {false, true, false, true},
                                        {false, false, true, true},
                                        {false, false, false, true}};
  FinCat P = poset_category(leq);
  std::vector<int> operm = {0, 2, 1, 3};
  GCategory C;
  C.cat = P;
  C.G = C2;
  C.obj_act = {{0, 1, 2, 3}, operm};
  C.mor_act.assign(2, std::vector<int>(P.nmor()));
  for (int f = 0; f < P.nmor(); ++f) {
    C.mor_act[0][f] = f;
    for (int g = 0; g < P.nmor(); ++g)
      if (P.src[g] == operm[P.src[f]] && P.tgt[g] == operm[P.tgt[f]])
        C.mor_act[1][f] = g;
  }
  return C;
}

}  // namespace

TEST_CASE("strictification makes randomized pseudo functors strictly "
          "equivariant",
          "[rectify]") {
  Budget b = big_budget();
  auto instances = make_random_pseudo_instances(24, 20240817u);
  REQUIRE(instances.size() == 24u);
  int n_equiv = 0, n_nonequiv = 0;
  for (const auto& inst : instances) {
    CAPTURE(inst.family);
    REQUIRE(validate_pseudo(inst.P, b).ok());
    CHECK(check_equivalence(inst.P.C.cat, inst.P.D.cat, inst.P.Th).ok() ==
          inst.is_equivalence);
    Strictified S = strictify(inst.P, b);
    CHECK_FALSE(equivariance_violation(S.TC.out, S.TD.out, S.F).has_value());
    (inst.is_equivalence ? n_equiv : n_nonequiv) += 1;
  }
  CHECK(n_equiv >= 1);
  CHECK(n_nonequiv >= 1);
}

TEST_CASE("pseudo equivalences induce equivalences on homotopy fixed points",
          "[rectify]") {
  Budget b = big_budget();
  auto instances = make_random_pseudo_instances(24, 20240817u);
  for (const auto& inst : instances) {
    CAPTURE(inst.family);
    for (const auto& H : inst.P.C.G.subgroups()) {
      HofixCat HC = homotopy_fixed_points(inst.P.C, H, b);
      HofixCat HD = homotopy_fixed_points(inst.P.D, H, b);
      Functor Fh = induced_hofix_map(inst.P, HC, HD);
      if (inst.is_equivalence)
        CHECK(check_equivalence(HC.cat, HD.cat, Fh).ok());
      else
        CHECK(is_functor(HC.cat, HD.cat, Fh));
    }
  }
}

TEST_CASE("strict inputs strictify to plain postcomposition", "[rectify]") {
  Budget b = big_budget();
  FiniteGroup C2 = make_cyclic_group(2);
  GCategory C = make_chaotic(C2);
  // left translation by the nontrivial element; equivariant since C2 is
  // abelian
  Functor F;
  F.ob = {C2.mul(1, 0), C2.mul(1, 1)};
  F.mor.resize(C.cat.nmor());
  for (int m = 0; m < C.cat.nmor(); ++m)
    F.mor[m] = F.ob[C.cat.tgt[m]] * C2.n + F.ob[C.cat.src[m]];
  REQUIRE_FALSE(equivariance_violation(C, C, F).has_value());

  PseudoEqFunctor P = strict_pseudo(C, C, F);
  REQUIRE(validate_pseudo(P, b).strict);
  Strictified S = strictify(P, b);
  for (size_t i = 0; i < S.TC.objects.size(); ++i) {
    const TildeObj& t = S.TC.objects[i];
    TildeObj expect;
    for (int g = 0; g < C2.n; ++g) {
      expect.cobj.push_back(F.ob[t.cobj[g]]);
      expect.psi.push_back(F.mor[t.psi[g]]);
    }
    CHECK(S.TD.objects[S.F.ob[i]] == expect);
  }
  for (size_t m = 0; m < S.TC.mor_data.size(); ++m)
    CHECK(S.TD.mor_data[S.F.mor[m]][2] == F.mor[S.TC.mor_data[m][2]]);
}

TEST_CASE("the monoidal pairing on the exponential is equivariant, functorial, "
          "and unital",
          "[rectify]") {
  Budget b = big_budget();
  FiniteGroup C2 = make_cyclic_group(2);
  GCategory C = make_chaotic(C2);
  const int m = C2.n;
  auto mid = [&](int tgt, int src) { return tgt * m + src; };

  // group multiplication as a monoidal structure; the comparison data tau
  // is forced and genuinely nontrivial for the translation action
  MonoidalGData M;
  M.unit = C2.e;
  M.ob.assign(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int bb = 0; bb < m; ++bb) M.ob[a][bb] = C2.mul(a, bb);
  M.mor.assign(C.cat.nmor(), std::vector<int>(C.cat.nmor()));
  for (int f = 0; f < C.cat.nmor(); ++f)
    for (int h = 0; h < C.cat.nmor(); ++h)
      M.mor[f][h] = mid(M.ob[C.cat.tgt[f]][C.cat.tgt[h]],
                        M.ob[C.cat.src[f]][C.cat.src[h]]);
  M.tau.assign(C2.n, std::vector<std::vector<int>>(m, std::vector<int>(m)));
  bool tau_nontrivial = false;
  for (int g = 0; g < C2.n; ++g)
    for (int a = 0; a < m; ++a)
      for (int bb = 0; bb < m; ++bb) {
        int s = M.ob[C.oact(g, a)][C.oact(g, bb)];
        int t = C.oact(g, M.ob[a][bb]);
        M.tau[g][a][bb] = mid(t, s);
        if (s != t) tau_nontrivial = true;
      }
  REQUIRE(tau_nontrivial);
  REQUIRE_FALSE(monoidal_gdata_violation(C, M).has_value());

  TildeCat T = cat_tilde_g(C, b);

  // object-level equivariance: oplus(g.A, g.B) == g.oplus(A, B)
  for (size_t i = 0; i < T.objects.size(); ++i)
    for (size_t j = 0; j < T.objects.size(); ++j) {
      int base = T.find_object(tilde_oplus(C, M, T.objects[i], T.objects[j]));
      REQUIRE(base >= 0);
      for (int g = 0; g < C2.n; ++g) {
        int gi = T.out.obj_act[g][i], gj = T.out.obj_act[g][j];
        int lhs = T.find_object(tilde_oplus(C, M, T.objects[gi], T.objects[gj]));
        CHECK(lhs == T.out.obj_act[g][base]);
      }
    }

  // functoriality and interchange at the morphism level
  int checked_pairs = 0;
  for (size_t m1 = 0; m1 < T.mor_data.size(); ++m1)
    for (size_t m2 = 0; m2 < T.mor_data.size(); ++m2) {
      auto pm = tilde_oplus_mor(T, M, T.mor_data[m1], T.mor_data[m2]);
      REQUIRE(T.mor_index.count(pm));
      for (size_t k1 = 0; k1 < T.mor_data.size(); ++k1) {
        if (!T.out.cat.composable(static_cast<int>(k1), static_cast<int>(m1)))
          continue;
        for (size_t k2 = 0; k2 < T.mor_data.size(); ++k2) {
          if (!T.out.cat.composable(static_cast<int>(k2), static_cast<int>(m2)))
            continue;
          auto pk = tilde_oplus_mor(T, M, T.mor_data[k1], T.mor_data[k2]);
          int lhs = T.out.cat.compose(T.mor_index.at(pk), T.mor_index.at(pm));
          int c1 = T.out.cat.compose(static_cast<int>(k1), static_cast<int>(m1));
          int c2 = T.out.cat.compose(static_cast<int>(k2), static_cast<int>(m2));
          auto pc = tilde_oplus_mor(T, M, T.mor_data[c1], T.mor_data[c2]);
          CHECK(lhs == T.mor_index.at(pc));
          ++checked_pairs;
        }
      }
    }
  CHECK(checked_pairs > 0);

  // the twisted unit absorbs up to isomorphism
  TildeObj FI = twisted_point_tilde_obj(C, M.unit);
  int fi = T.find_object(FI);
  REQUIRE(fi >= 0);
  for (size_t i = 0; i < T.objects.size(); ++i) {
    int li = T.find_object(tilde_oplus(C, M, FI, T.objects[i]));
    REQUIRE(li >= 0);
    CHECK(objects_isomorphic(T.out.cat, li, static_cast<int>(i)));
  }
}

TEST_CASE("twisted points are invariant up to isomorphism exactly when the "
          "twisting exists",
          "[rectify]") {
  Budget b = big_budget();
  FiniteGroup C2 = make_cyclic_group(2);
  GCategory C = make_chaotic(C2);
  TildeObj F0 = twisted_point_tilde_obj(C, 0);
  REQUIRE(C.oact(1, 0) != 0);  // the basepoint itself is moved ...
  TildeCat T = cat_tilde_g(C, b);
  int i0 = T.find_object(F0);
  REQUIRE(i0 >= 0);
  // ... yet the twisted point is carried to an isomorphic object
  for (int g = 0; g < C2.n; ++g)
    CHECK(objects_isomorphic(T.out.cat, T.out.obj_act[g][i0], i0));

  // on a free discrete orbit there is nothing to twist with
  GCategory D = discrete_gcategory(2, C2, {{0, 1}, {1, 0}});
  CHECK_THROWS_AS(twisted_point_tilde_obj(D, 0), Error);
}

TEST_CASE("chosen pushouts find the least upper bound in a lattice",
          "[rectify]") {
  Budget b;
  std::vector<std::vector<bool>> leq = {{true, true, true, true},
                                        {false, true, false, true},
                                        {false, false, true, true},
                                        {false, false, false, true}};
  FinCat P = poset_category(leq);
  int u1 = P.hom(0, 1)[0], u2 = P.hom(0, 2)[0];
  ChosenPushout cp = chosen_pushout(P, u1, u2, b);
  CHECK(cp.has_cocone);
  CHECK(cp.ok());
  CHECK(cp.q == 3);

  // a v-shaped poset has no cocone over the two-legged span
  std::vector<std::vector<bool>> vshape = {{true, true, true},
                                           {false, true, false},
                                           {false, false, true}};
  FinCat V = poset_category(vshape);
  ChosenPushout vc = chosen_pushout(V, V.hom(0, 1)[0], V.hom(0, 2)[0], b);
  CHECK_FALSE(vc.has_cocone);
  CHECK_FALSE(vc.ok());
}

TEST_CASE("exponential pushouts are universal and equivariant", "[rectify]") {
  Budget b = big_budget();
  GCategory C = swapped_lattice();
  validate_gcategory(C, b);
  const FinCat& P = C.cat;

  int u1 = -1, u2 = -1;
  for (int f = 0; f < P.nmor(); ++f) {
    if (P.src[f] == 0 && P.tgt[f] == 1) u1 = f;
    if (P.src[f] == 0 && P.tgt[f] == 2) u2 = f;
  }
  REQUIRE(u1 >= 0);
  REQUIRE(u2 >= 0);

  TildeCat T = cat_tilde_g(C, b);
  REQUIRE(T.objects.size() == 4u);  // only identity isos, so no twisting
  auto tobj = [&](int a) { return T.find_object(constant_tilde_obj(C, a)); };
  auto tmor = [&](int i, int j, int u) {
    return std::array<int, 3>{tobj(i), tobj(j), u};
  };
  auto eta1 = tmor(0, 1, u1), eta2 = tmor(0, 2, u2);
  TildePushout tp = tilde_pushout(T, eta1, eta2, b);
  CHECK(tp.q_index == tobj(3));
  CHECK(tilde_pushout_is_universal(T, eta1, eta2, tp, b));

  // acting on the span and pushing out again lands on the acted result
  for (int g = 0; g < C.G.n; ++g) {
    auto act_m = [&](const std::array<int, 3>& md) {
      return T.mor_data[T.out.mor_act[g][T.mor_index.at(md)]];
    };
    TildePushout gp = tilde_pushout(T, act_m(eta1), act_m(eta2), b);
    CHECK(gp.q_index == T.out.obj_act[g][tp.q_index]);
    CHECK(T.mor_index.at(gp.leg1) == T.out.mor_act[g][T.mor_index.at(tp.leg1)]);
    CHECK(T.mor_index.at(gp.leg2) == T.out.mor_act[g][T.mor_index.at(tp.leg2)]);
  }

  // a span with no cocone at all is refused with a distinct reason
  std::vector<std::vector<bool>> vshape = {{true, true, true},
                                           {false, true, false},
                                           {false, false, true}};
  FinCat V = poset_category(vshape);
  int v1 = V.hom(0, 1)[0], v2 = V.hom(0, 2)[0];
  GCategory VG = trivial_action_gcategory(V, make_cyclic_group(2));
  TildeCat TV = cat_tilde_g(VG, b);
  CHECK_THROWS_MATCHES(
      tilde_pushout(TV,
                    {TV.find_object(constant_tilde_obj(VG, 0)),
                     TV.find_object(constant_tilde_obj(VG, 1)), v1},
                    {TV.find_object(constant_tilde_obj(VG, 0)),
                     TV.find_object(constant_tilde_obj(VG, 2)), v2},
                    b),
      Error, Catch::Matchers::MessageMatches(
                 Catch::Matchers::ContainsSubstring("no cocone")));
}

TEST_CASE("equivariant skeletons collapse isomorphism classes and retract "
          "naturally",
          "[rectify]") {
  Budget b = big_budget();

  for (int n : {2, 3}) {
    GCategory C = make_chaotic(make_cyclic_group(n));
    EquivariantSkeleton S = equivariant_skeleton(C, b);
    validate_gcategory(S.sk, b);
    CHECK(S.sk.cat.nobj == 1);
    CHECK(num_iso_classes(S.sk.cat) == S.sk.cat.nobj);
    CHECK_FALSE(equivariance_violation(C, S.sk, S.retraction).has_value());
    Functor ri = compose_functors(S.retraction, S.inclusion);
    Functor ir = compose_functors(S.inclusion, S.retraction);
    Functor idsk = identity_functor(S.sk.cat);
    CHECK(ri.ob == idsk.ob);
    CHECK(ri.mor == idsk.mor);
    CHECK(is_natural(C.cat, C.cat, identity_functor(C.cat), ir, S.gamma));
    CHECK(naturally_isomorphic(C.cat, C.cat, ir, identity_functor(C.cat)));
  }

  // the exponential of a chaotic category still collapses to a point
  GCategory C = make_chaotic(make_cyclic_group(2));
  TildeCat T = cat_tilde_g(C, b);
  REQUIRE(T.objects.size() == 4u);
  EquivariantSkeleton S = equivariant_skeleton(T.out, b);
  validate_gcategory(S.sk, b);
  CHECK(S.sk.cat.nobj == 1);
  CHECK_FALSE(equivariance_violation(T.out, S.sk, S.retraction).has_value());
  CHECK(naturally_isomorphic(T.out.cat, T.out.cat,
                             compose_functors(S.inclusion, S.retraction),
                             identity_functor(T.out.cat)));

  // two swapped points plus a fixed chaotic pair: still one class
  FiniteGroup C2 = make_cyclic_group(2);
  GCategory D = chaotic_gcategory(4, C2, {{0, 1, 2, 3}, {1, 0, 3, 2}});
  EquivariantSkeleton SD = equivariant_skeleton(D, b);
  validate_gcategory(SD.sk, b);
  CHECK(SD.sk.cat.nobj == 1);

  // a discrete category is already skeletal: nothing collapses
  GCategory E = discrete_gcategory(3, C2, {{0, 1, 2}, {1, 0, 2}});
  EquivariantSkeleton SE = equivariant_skeleton(E, b);
  validate_gcategory(SE.sk, b);
  CHECK(SE.sk.cat.nobj == 3);
  CHECK_FALSE(equivariance_violation(E, SE.sk, SE.retraction).has_value());
}
