#pragma once
// Rectification: replace pseudo equivariant data by strictly equivariant
// data inside the exponential construction.
//
//  - strictify: a pseudo equivariant functor C -> D induces a strictly
//    equivariant functor Cat(G~,C) -> Cat(G~,D) by
//    F(g) |-> g.Th(g^{-1} F(g)), psi |-> theta_g(g^{-1} F(g)) . Th(psi_g).
//  - induced map on homotopy fixed points: (c, f) |-> (Th(c), f_theta)
//    with f_theta(h) = Th(f(h)) . theta_h(c)^{-1}.
//  - monoidal pairing, twisted basepoints, pushouts and skeleta, each
//    made strictly equivariant by the same g(g^{-1} -) twist.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hofix/cat_tilde.hpp"
#include "hofix/pseudo.hpp"

namespace hofix {

// The strictly equivariant functor between exponentials induced by a
// pseudo equivariant one. TC and TD must be the materialized exponentials
// of P.C and P.D.
inline Functor strictify_functor(const PseudoEqFunctor& P, const TildeCat& TC,
                                 const TildeCat& TD) {
  const GCategory& C = P.C;
  const GCategory& D = P.D;
  const int n = C.G.n;
  Functor F;
  for (const auto& t : TC.objects) {
    TildeObj s;
    s.cobj.resize(n);
    s.psi.resize(n);
    for (int g = 0; g < n; ++g) {
      int gi = C.G.inv(g);
      int back = C.oact(gi, t.cobj[g]);  // g^{-1} F(g)
      s.cobj[g] = D.oact(g, P.Th.ob[back]);
      s.psi[g] = D.cat.compose(P.theta[g][back], P.Th.mor[t.psi[g]]);
    }
    int idx = TD.find_object(s);
    if (idx < 0) throw Error("strictified image is not a valid tilde object");
    F.ob.push_back(idx);
  }
  for (const auto& md : TC.mor_data) {
    auto it = TD.mor_index.find({F.ob[md[0]], F.ob[md[1]], P.Th.mor[md[2]]});
    if (it == TD.mor_index.end())
      throw Error("strictified image is not a valid tilde morphism");
    F.mor.push_back(it->second);
  }
  return F;
}

struct Strictified {
  TildeCat TC, TD;
  Functor F;  // TC.out -> TD.out
};

inline Strictified strictify(const PseudoEqFunctor& P, const Budget& budget = Budget{}) {
  Strictified S;
  S.TC = cat_tilde_g(P.C, budget);
  S.TD = cat_tilde_g(P.D, budget);
  S.F = strictify_functor(P, S.TC, S.TD);
  return S;
}

// The induced functor on homotopy fixed points over a subgroup. HC and HD
// must be the homotopy fixed point categories of P.C and P.D over the
// same subgroup element list.
inline Functor induced_hofix_map(const PseudoEqFunctor& P, const HofixCat& HC,
                                 const HofixCat& HD) {
  if (HC.elems != HD.elems) throw Error("fixed point categories over different subgroups");
  Functor F;
  for (const auto& o : HC.objects) {
    HofixObj q;
    q.c = P.Th.ob[o.c];
    q.f.resize(HC.H.n);
    for (int k = 0; k < HC.H.n; ++k) {
      auto tinv = P.D.cat.inverse_of(P.theta[HC.elems[k]][o.c]);
      if (!tinv) throw Error("comparison iso has no inverse");
      q.f[k] = P.D.cat.compose(P.Th.mor[o.f[k]], *tinv);
    }
    int idx = HD.find_object(q);
    if (idx < 0) throw Error("induced fixed point datum is not a twisted cocycle");
    F.ob.push_back(idx);
  }
  for (const auto& md : HC.mor_data) {
    auto it = HD.mor_index.find({F.ob[md[0]], F.ob[md[1]], P.Th.mor[md[2]]});
    if (it == HD.mor_index.end())
      throw Error("induced fixed point morphism fails the twisting condition");
    F.mor.push_back(it->second);
  }
  return F;
}

// A binary operation on a G-category with a pseudo equivariance witness
// tau_g(a,b): (g.a) + (g.b) -> g.(a + b).
struct MonoidalGData {
  std::vector<std::vector<int>> ob;                // ob[a][b]
  std::vector<std::vector<int>> mor;               // mor[f][h]
  std::vector<std::vector<std::vector<int>>> tau;  // tau[g][a][b]
  int unit = 0;
};

inline std::optional<std::string> monoidal_gdata_violation(const GCategory& C,
                                                           const MonoidalGData& M) {
  const FinCat& cat = C.cat;
  if (static_cast<int>(M.ob.size()) != cat.nobj ||
      static_cast<int>(M.mor.size()) != cat.nmor())
    return "pairing tables have wrong sizes";
  for (int f = 0; f < cat.nmor(); ++f)
    for (int h = 0; h < cat.nmor(); ++h) {
      int m = M.mor[f][h];
      if (cat.src[m] != M.ob[cat.src[f]][cat.src[h]] ||
          cat.tgt[m] != M.ob[cat.tgt[f]][cat.tgt[h]])
        return "pairing of morphisms has wrong endpoints";
    }
  for (int a = 0; a < cat.nobj; ++a)
    for (int b = 0; b < cat.nobj; ++b)
      if (M.mor[cat.idm[a]][cat.idm[b]] != cat.idm[M.ob[a][b]])
        return "pairing does not preserve identities";
  for (int f2 = 0; f2 < cat.nmor(); ++f2)
    for (int f1 = 0; f1 < cat.nmor(); ++f1) {
      if (!cat.composable(f2, f1)) continue;
      for (int h2 = 0; h2 < cat.nmor(); ++h2)
        for (int h1 = 0; h1 < cat.nmor(); ++h1) {
          if (!cat.composable(h2, h1)) continue;
          if (M.mor[cat.compose(f2, f1)][cat.compose(h2, h1)] !=
              cat.compose(M.mor[f2][h2], M.mor[f1][h1]))
            return "pairing does not preserve composition";
        }
    }
  if (static_cast<int>(M.tau.size()) != C.G.n) return "comparison table wrong size";
  for (int g = 0; g < C.G.n; ++g)
    for (int a = 0; a < cat.nobj; ++a)
      for (int b = 0; b < cat.nobj; ++b) {
        int t = M.tau[g][a][b];
        if (cat.src[t] != M.ob[C.oact(g, a)][C.oact(g, b)] ||
            cat.tgt[t] != C.oact(g, M.ob[a][b]))
          return "comparison iso has wrong endpoints";
        if (!cat.is_iso(t)) return "comparison is not invertible";
        if (g == C.G.e && t != cat.idm[M.ob[a][b]])
          return "comparison at the identity element is not the identity";
      }
  for (int g = 0; g < C.G.n; ++g)
    for (int f = 0; f < cat.nmor(); ++f)
      for (int h = 0; h < cat.nmor(); ++h) {
        int a = cat.src[f], b = cat.src[h];
        int lhs = cat.compose(M.tau[g][cat.tgt[f]][cat.tgt[h]],
                              M.mor[C.mact(g, f)][C.mact(g, h)]);
        int rhs = cat.compose(C.mact(g, M.mor[f][h]), M.tau[g][a][b]);
        if (lhs != rhs) return "comparison not natural";
      }
  for (int g = 0; g < C.G.n; ++g)
    for (int h = 0; h < C.G.n; ++h)
      for (int a = 0; a < cat.nobj; ++a)
        for (int b = 0; b < cat.nobj; ++b) {
          int lhs = M.tau[C.G.mul(g, h)][a][b];
          int rhs = cat.compose(C.mact(g, M.tau[h][a][b]),
                                M.tau[g][C.oact(h, a)][C.oact(h, b)]);
          if (lhs != rhs) return "comparison coherence fails";
        }
  return std::nullopt;
}

// The rectified pairing on tilde objects:
// (A + B)(g) = g.(g^{-1}A(g) + g^{-1}B(g)),
// psi_g = tau_g(g^{-1}A(g), g^{-1}B(g)) . (psi^A_g + psi^B_g).
inline TildeObj tilde_oplus(const GCategory& C, const MonoidalGData& M,
                            const TildeObj& A, const TildeObj& B) {
  const int n = C.G.n;
  TildeObj t;
  t.cobj.resize(n);
  t.psi.resize(n);
  for (int g = 0; g < n; ++g) {
    int gi = C.G.inv(g);
    int a = C.oact(gi, A.cobj[g]), b = C.oact(gi, B.cobj[g]);
    t.cobj[g] = C.oact(g, M.ob[a][b]);
    t.psi[g] = C.cat.compose(M.tau[g][a][b], M.mor[A.psi[g]][B.psi[g]]);
  }
  return t;
}

// The pairing on tilde morphisms is the pairing of e-components.
inline std::array<int, 3> tilde_oplus_mor(const TildeCat& T, const MonoidalGData& M,
                                          const std::array<int, 3>& m1,
                                          const std::array<int, 3>& m2) {
  const GCategory& C = T.base;
  TildeObj s = tilde_oplus(C, M, T.objects[m1[0]], T.objects[m2[0]]);
  TildeObj t = tilde_oplus(C, M, T.objects[m1[1]], T.objects[m2[1]]);
  int si = T.find_object(s), ti = T.find_object(t);
  if (si < 0 || ti < 0) throw Error("pairing left the exponential category");
  return {si, ti, M.mor[m1[2]][m2[2]]};
}

// The twisted basepoint F(g) = g.z with a deterministic iso choice; the
// first iso z -> g.z in enumeration order is taken. Throws when some
// translate is not isomorphic to z.
inline TildeObj twisted_point_tilde_obj(const GCategory& C, int z) {
  const int n = C.G.n;
  TildeObj t;
  t.cobj.resize(n);
  t.psi.resize(n);
  for (int g = 0; g < n; ++g) {
    t.cobj[g] = C.oact(g, z);
    if (g == C.G.e) {
      t.psi[g] = C.cat.idm[z];
      continue;
    }
    int found = -1;
    for (int f = 0; f < C.cat.nmor(); ++f)
      if (C.cat.src[f] == z && C.cat.tgt[f] == t.cobj[g] && C.cat.is_iso(f)) {
        found = f;
        break;
      }
    if (found < 0)
      throw Error("basepoint " + C.cat.obj_name(z) + " is not isomorphic to its " +
                  C.G.name(g) + "-translate");
    t.psi[g] = found;
  }
  return t;
}

// Deterministic chosen pushout of a span u1: a -> b1, u2: a -> b2 by
// brute-force universal property. Returns the first universal cocone in
// enumeration order; distinguishes "no cocone" from "no universal one".
struct ChosenPushout {
  int q = -1, j1 = -1, j2 = -1;
  bool has_cocone = false;
  bool ok() const { return q >= 0; }
};

inline ChosenPushout chosen_pushout(const FinCat& C, int u1, int u2,
                                    const Budget& budget = Budget{}) {
  if (C.src[u1] != C.src[u2]) throw Error("span legs have different sources");
  ChosenPushout res;
  std::vector<std::array<int, 3>> cocones;
  for (int q = 0; q < C.nobj; ++q)
    for (int j1 : C.hom(C.tgt[u1], q))
      for (int j2 : C.hom(C.tgt[u2], q)) {
        budget.charge(1, "pushout cocone scan");
        if (C.compose(j1, u1) == C.compose(j2, u2)) cocones.push_back({q, j1, j2});
      }
  if (cocones.empty()) return res;
  res.has_cocone = true;
  for (const auto& cand : cocones) {
    bool universal = true;
    for (const auto& other : cocones) {
      budget.charge(static_cast<long long>(C.nmor()), "pushout universality scan");
      int count = 0;
      for (int m : C.hom(cand[0], other[0]))
        if (C.compose(m, cand[1]) == other[1] && C.compose(m, cand[2]) == other[2])
          ++count;
      if (count != 1) {
        universal = false;
        break;
      }
    }
    if (universal) {
      res.q = cand[0];
      res.j1 = cand[1];
      res.j2 = cand[2];
      return res;
    }
  }
  return res;
}

// A pushout in the exponential category, computed slotwise from base
// pushouts of the g^{-1}-translated component spans. Equivariant as a
// choice: the construction commutes with the G-action on spans.
struct TildePushout {
  TildeObj Q;
  int q_index = -1;          // object index in the exponential
  std::array<int, 3> leg1{}, leg2{};  // tilde morphisms B1 -> Q, B2 -> Q
};

inline TildePushout tilde_pushout(const TildeCat& T, const std::array<int, 3>& eta1,
                                  const std::array<int, 3>& eta2,
                                  const Budget& budget = Budget{}) {
  const GCategory& C = T.base;
  const FinCat& cat = C.cat;
  if (eta1[0] != eta2[0]) throw Error("span legs have different sources");
  const TildeObj& A = T.objects[eta1[0]];
  const TildeObj& B1 = T.objects[eta1[1]];
  const TildeObj& B2 = T.objects[eta2[1]];
  const int n = C.G.n;
  std::vector<int> inv_psi_a(n), comp1(n), comp2(n);
  for (int g = 0; g < n; ++g) {
    auto inv = cat.inverse_of(A.psi[g]);
    if (!inv) throw Error("structure map has no inverse");
    inv_psi_a[g] = *inv;
    comp1[g] = cat.compose(cat.compose(B1.psi[g], eta1[2]), inv_psi_a[g]);
    comp2[g] = cat.compose(cat.compose(B2.psi[g], eta2[2]), inv_psi_a[g]);
  }
  TildePushout res;
  res.Q.cobj.resize(n);
  res.Q.psi.resize(n);
  std::vector<ChosenPushout> base(n);
  for (int g = 0; g < n; ++g) {
    int gi = C.G.inv(g);
    base[g] = chosen_pushout(cat, C.mact(gi, comp1[g]), C.mact(gi, comp2[g]), budget);
    if (!base[g].has_cocone) throw Error("span admits no cocone at slot " + C.G.name(g));
    if (!base[g].ok()) throw Error("span has cocones but no universal one at slot " + C.G.name(g));
    res.Q.cobj[g] = C.oact(g, base[g].q);
  }
  const int e = C.G.e;
  // components of the legs at each slot
  std::vector<int> leg1_comp(n), leg2_comp(n);
  for (int g = 0; g < n; ++g) {
    leg1_comp[g] = C.mact(g, base[g].j1);  // B1_g -> g.q_g
    leg2_comp[g] = C.mact(g, base[g].j2);
  }
  for (int g = 0; g < n; ++g) {
    if (g == e) {
      res.Q.psi[g] = cat.idm[res.Q.cobj[e]];
      continue;
    }
    int k1 = cat.compose(leg1_comp[g], B1.psi[g]);  // B1_e -> g.q_g
    int k2 = cat.compose(leg2_comp[g], B2.psi[g]);
    // unique factorization through the slot-e pushout
    int found = -1, count = 0;
    for (int m : cat.hom(res.Q.cobj[e], res.Q.cobj[g]))
      if (cat.compose(m, leg1_comp[e]) == k1 && cat.compose(m, leg2_comp[e]) == k2) {
        found = m;
        ++count;
      }
    if (count != 1) throw Error("structure map factorization is not unique");
    if (!cat.is_iso(found)) throw Error("structure map of the pushout is not invertible");
    res.Q.psi[g] = found;
  }
  res.q_index = T.find_object(res.Q);
  if (res.q_index < 0) throw Error("pushout left the exponential category");
  res.leg1 = {eta1[1], res.q_index, leg1_comp[e]};
  res.leg2 = {eta2[1], res.q_index, leg2_comp[e]};
  if (!T.mor_index.count(res.leg1) || !T.mor_index.count(res.leg2))
    throw Error("pushout legs are not tilde morphisms");
  return res;
}

// Brute-force check that a tilde pushout is universal inside the
// materialized exponential category.
inline bool tilde_pushout_is_universal(const TildeCat& T, const std::array<int, 3>& eta1,
                                       const std::array<int, 3>& eta2,
                                       const TildePushout& P,
                                       const Budget& budget = Budget{}) {
  const FinCat& cat = T.out.cat;
  int m_eta1 = T.mor_index.at(eta1), m_eta2 = T.mor_index.at(eta2);
  int m_l1 = T.mor_index.at(P.leg1), m_l2 = T.mor_index.at(P.leg2);
  if (cat.compose(m_l1, m_eta1) != cat.compose(m_l2, m_eta2)) return false;
  for (int r = 0; r < cat.nobj; ++r)
    for (int w1 : cat.hom(eta1[1], r))
      for (int w2 : cat.hom(eta2[1], r)) {
        budget.charge(1, "pushout universality checks");
        if (cat.compose(w1, m_eta1) != cat.compose(w2, m_eta2)) continue;
        int count = 0;
        for (int m : cat.hom(P.q_index, r))
          if (cat.compose(m, m_l1) == w1 && cat.compose(m, m_l2) == w2) ++count;
        if (count != 1) return false;
      }
  return true;
}

// Skeleton data: one representative per iso class with coherent
// contraction isos gamma_D: D -> rep(D), gamma_rep = id, satisfying
// gamma_{gD} = gamma_{g.rep(D)} . (g.gamma_D). The skeleton becomes a
// strict G-category via g*phi = gamma_{gB} . (g.phi) . gamma_{gA}^{-1};
// the retraction f |-> gamma_Y . f . gamma_X^{-1} is equivariant.
struct EquivariantSkeleton {
  GCategory sk;
  std::vector<int> reps;       // sk object -> ambient object
  std::vector<int> rep_of;     // ambient object -> its representative
  std::vector<int> gamma;      // ambient object D -> iso D -> rep_of[D]
  std::vector<int> obj_to_sk;  // ambient object -> sk object index
  Functor inclusion;           // sk -> ambient (full, not equivariant in general)
  Functor retraction;          // ambient -> sk (equivariant)
};

inline EquivariantSkeleton equivariant_skeleton(const GCategory& C,
                                                const Budget& budget = Budget{}) {
  const FinCat& cat = C.cat;
  const int nob = cat.nobj;
  auto cls = iso_classes(cat);
  EquivariantSkeleton S;
  S.rep_of.assign(nob, -1);
  std::vector<int> class_rep(nob > 0 ? 1 + *std::max_element(cls.begin(), cls.end()) : 0,
                             -1);
  for (int a = 0; a < nob; ++a)
    if (class_rep[cls[a]] < 0) class_rep[cls[a]] = a;  // minimal index per class
  for (int a = 0; a < nob; ++a) S.rep_of[a] = class_rep[cls[a]];

  // candidate gamma lists, minimal morphism index first
  std::vector<std::vector<int>> cand(nob);
  for (int a = 0; a < nob; ++a) {
    if (S.rep_of[a] == a) {
      cand[a] = {cat.idm[a]};
      continue;
    }
    for (int f : cat.hom(a, S.rep_of[a]))
      if (cat.is_iso(f)) cand[a].push_back(f);
    if (cand[a].empty()) throw Error("no iso onto the class representative");
  }
  std::vector<int> gamma(nob, -1);
  // objects in assignment order: representatives first (gamma forced)
  std::vector<int> order;
  for (int a = 0; a < nob; ++a)
    if (S.rep_of[a] == a) {
      gamma[a] = cat.idm[a];
    } else {
      order.push_back(a);
    }
  auto coherent_so_far = [&](int just) {
    for (int g = 0; g < C.G.n; ++g)
      for (int d = 0; d < nob; ++d) {
        if (gamma[d] < 0) continue;
        int gd = C.oact(g, d);
        int grep = C.oact(g, S.rep_of[d]);
        if (gamma[gd] < 0 || gamma[grep] < 0) continue;
        if (gd != just && grep != just && d != just) continue;
        budget.charge(1, "skeleton coherence checks");
        if (gamma[gd] != cat.compose(gamma[grep], C.mact(g, gamma[d]))) return false;
      }
    return true;
  };
  // depth-first search over candidate contractions
  std::vector<size_t> pick(order.size(), 0);
  size_t depth = 0;
  while (depth < order.size()) {
    int a = order[depth];
    bool placed = false;
    for (size_t& p = pick[depth]; p < cand[a].size(); ++p) {
      gamma[a] = cand[a][p];
      if (coherent_so_far(a)) {
        placed = true;
        break;
      }
      gamma[a] = -1;
    }
    if (placed) {
      ++depth;
      continue;
    }
    gamma[a] = -1;
    pick[depth] = 0;
    if (depth == 0)
      throw Error("no coherent family of contraction isos exists (obstruction at " +
                  cat.obj_name(a) + ")");
    --depth;
    gamma[order[depth]] = -1;
    ++pick[depth];
    // re-enter the loop; the for above resumes from the stored pick
    while (pick[depth] >= cand[order[depth]].size()) {
      pick[depth] = 0;
      if (depth == 0)
        throw Error("no coherent family of contraction isos exists");
      --depth;
      gamma[order[depth]] = -1;
      ++pick[depth];
    }
  }
  S.gamma = gamma;

  // the skeleton as a category: full subcategory on the representatives
  std::vector<int> reps;
  for (int a = 0; a < nob; ++a)
    if (S.rep_of[a] == a) reps.push_back(a);
  S.reps = reps;
  FullSubcat V = full_subcategory(cat, reps);
  S.obj_to_sk.assign(nob, -1);
  for (size_t i = 0; i < reps.size(); ++i) S.obj_to_sk[reps[i]] = static_cast<int>(i);
  S.sk.cat = V.cat;
  S.sk.G = C.G;
  S.sk.obj_act.assign(C.G.n, std::vector<int>(V.cat.nobj));
  S.sk.mor_act.assign(C.G.n, std::vector<int>(V.cat.nmor()));
  std::vector<int> gamma_inv(nob);
  for (int a = 0; a < nob; ++a) {
    auto inv = cat.inverse_of(gamma[a]);
    if (!inv) throw Error("contraction is not invertible");
    gamma_inv[a] = *inv;
  }
  for (int g = 0; g < C.G.n; ++g) {
    for (int i = 0; i < V.cat.nobj; ++i)
      S.sk.obj_act[g][i] = S.obj_to_sk[S.rep_of[C.oact(g, reps[i])]];
    for (int m = 0; m < V.cat.nmor(); ++m) {
      int f = V.mor_orig[m];
      int ga = C.oact(g, cat.src[f]), gb = C.oact(g, cat.tgt[f]);
      int img = cat.compose(gamma[gb], cat.compose(C.mact(g, f), gamma_inv[ga]));
      int sub = V.mor_sub[img];
      if (sub < 0) throw Error("skeleton action left the subcategory");
      S.sk.mor_act[g][m] = sub;
    }
  }

  S.inclusion.ob = reps;
  for (int m = 0; m < V.cat.nmor(); ++m) S.inclusion.mor.push_back(V.mor_orig[m]);
  for (int a = 0; a < nob; ++a) S.retraction.ob.push_back(S.obj_to_sk[S.rep_of[a]]);
  for (int f = 0; f < cat.nmor(); ++f) {
    int img = cat.compose(gamma[cat.tgt[f]], cat.compose(f, gamma_inv[cat.src[f]]));
    int sub = V.mor_sub[img];
    if (sub < 0) throw Error("retraction left the subcategory");
    S.retraction.mor.push_back(sub);
  }
  return S;
}

}  // namespace hofix
