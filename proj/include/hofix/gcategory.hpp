#pragma once
// Categories with a strict action of a finite group: per-element object and
// morphism permutations that are functors and compose on the nose.

#include <optional>
#include <string>
#include <vector>

#include "hofix/fincat.hpp"
#include "hofix/gring.hpp"
#include "hofix/group.hpp"

namespace hofix {

struct GCategory {
  FinCat cat;
  FiniteGroup G;
  std::vector<std::vector<int>> obj_act, mor_act;  // [g][x]

  int oact(int g, int a) const { return obj_act[g][a]; }
  int mact(int g, int f) const { return mor_act[g][f]; }
};

inline std::optional<std::string> gcategory_violation(
    const GCategory& C, const Budget& budget = Budget{}) {
  const FinCat& cat = C.cat;
  const FiniteGroup& G = C.G;
  if (static_cast<int>(C.obj_act.size()) != G.n ||
      static_cast<int>(C.mor_act.size()) != G.n)
    return "action table has wrong group size";
  for (int g = 0; g < G.n; ++g) {
    if (static_cast<int>(C.obj_act[g].size()) != cat.nobj ||
        static_cast<int>(C.mor_act[g].size()) != cat.nmor())
      return "action table has wrong category size";
    for (int f = 0; f < cat.nmor(); ++f) {
      int gf = C.mor_act[g][f];
      if (cat.src[gf] != C.obj_act[g][cat.src[f]] ||
          cat.tgt[gf] != C.obj_act[g][cat.tgt[f]])
        return "action of " + G.name(g) + " breaks endpoints at " + cat.mor_name(f);
    }
    for (int a = 0; a < cat.nobj; ++a)
      if (C.mor_act[g][cat.idm[a]] != cat.idm[C.obj_act[g][a]])
        return "action of " + G.name(g) + " breaks the identity of " + cat.obj_name(a);
    for (int h = 0; h < cat.nmor(); ++h)
      for (int f = 0; f < cat.nmor(); ++f) {
        if (!cat.composable(h, f)) continue;
        budget.charge(1, "G-category functoriality check");
        if (C.mor_act[g][cat.compose(h, f)] !=
            cat.compose(C.mor_act[g][h], C.mor_act[g][f]))
          return "action of " + G.name(g) + " breaks composition at (" +
                 cat.mor_name(h) + "," + cat.mor_name(f) + ")";
      }
  }
  for (int a = 0; a < cat.nobj; ++a)
    if (C.obj_act[G.e][a] != a) return "identity group element moves objects";
  for (int f = 0; f < cat.nmor(); ++f)
    if (C.mor_act[G.e][f] != f) return "identity group element moves morphisms";
  for (int g = 0; g < G.n; ++g)
    for (int h = 0; h < G.n; ++h) {
      int gh = G.mul(g, h);
      for (int a = 0; a < cat.nobj; ++a)
        if (C.obj_act[gh][a] != C.obj_act[g][C.obj_act[h][a]])
          return "strictness fails on objects at (" + G.name(g) + "," + G.name(h) + ")";
      for (int f = 0; f < cat.nmor(); ++f)
        if (C.mor_act[gh][f] != C.mor_act[g][C.mor_act[h][f]])
          return "strictness fails on morphisms at (" + G.name(g) + "," + G.name(h) + ")";
    }
  return std::nullopt;
}

inline void validate_gcategory(const GCategory& C, const Budget& budget = Budget{}) {
  C.cat.validate(budget);
  if (auto v = gcategory_violation(C, budget)) throw ValidationError(*v);
}

// The H-fixed subcategory: objects and morphisms fixed by every element of H.
struct SubcatView {
  FinCat cat;
  std::vector<int> obj_orig, mor_orig;  // sub index -> parent index
  std::vector<int> obj_sub, mor_sub;    // parent index -> sub index or -1
};

inline SubcatView fixed_subcategory(const GCategory& C, const std::vector<int>& H) {
  SubcatView V;
  V.obj_sub.assign(C.cat.nobj, -1);
  V.mor_sub.assign(C.cat.nmor(), -1);
  for (int a = 0; a < C.cat.nobj; ++a) {
    bool fix = true;
    for (int h : H)
      if (C.oact(h, a) != a) fix = false;
    if (fix) {
      V.obj_sub[a] = static_cast<int>(V.obj_orig.size());
      V.obj_orig.push_back(a);
    }
  }
  for (int f = 0; f < C.cat.nmor(); ++f) {
    bool fix = V.obj_sub[C.cat.src[f]] >= 0 && V.obj_sub[C.cat.tgt[f]] >= 0;
    for (int h : H)
      if (C.mact(h, f) != f) fix = false;
    if (fix) {
      V.mor_sub[f] = static_cast<int>(V.mor_orig.size());
      V.mor_orig.push_back(f);
    }
  }
  V.cat.nobj = static_cast<int>(V.obj_orig.size());
  for (int f : V.mor_orig) {
    V.cat.src.push_back(V.obj_sub[C.cat.src[f]]);
    V.cat.tgt.push_back(V.obj_sub[C.cat.tgt[f]]);
    V.cat.mor_names.push_back(C.cat.mor_name(f));
  }
  for (int a : V.obj_orig) {
    V.cat.idm.push_back(V.mor_sub[C.cat.idm[a]]);
    V.cat.obj_names.push_back(C.cat.obj_name(a));
  }
  for (size_t gi = 0; gi < V.mor_orig.size(); ++gi)
    for (size_t fi = 0; fi < V.mor_orig.size(); ++fi) {
      int g = V.mor_orig[gi], f = V.mor_orig[fi];
      if (!C.cat.composable(g, f)) continue;
      int h = C.cat.compose(g, f);
      if (V.mor_sub[h] < 0)
        throw ValidationError("fixed morphisms are not closed under composition");
      V.cat.comp[{static_cast<int>(gi), static_cast<int>(fi)}] = V.mor_sub[h];
    }
  return V;
}

// An equivariant functor between G-categories over the same group.
inline std::optional<std::string> equivariance_violation(const GCategory& C,
                                                         const GCategory& D,
                                                         const Functor& F) {
  if (auto v = functor_violation(C.cat, D.cat, F)) return v;
  for (int g = 0; g < C.G.n; ++g) {
    for (int a = 0; a < C.cat.nobj; ++a)
      if (F.ob[C.oact(g, a)] != D.oact(g, F.ob[a]))
        return "not equivariant on object " + C.cat.obj_name(a) + " at " + C.G.name(g);
    for (int f = 0; f < C.cat.nmor(); ++f)
      if (F.mor[C.mact(g, f)] != D.mact(g, F.mor[f]))
        return "not equivariant on morphism " + C.cat.mor_name(f) + " at " + C.G.name(g);
  }
  return std::nullopt;
}

struct SubgroupEquivRow {
  std::vector<int> subgroup;  // element list
  EquivReport report;
};

struct WeakGEquivReport {
  std::optional<std::string> equivariance_violation;
  std::vector<SubgroupEquivRow> rows;
  bool ok() const {
    if (equivariance_violation) return false;
    for (const auto& r : rows)
      if (!r.report.ok()) return false;
    return !rows.empty();
  }
};

// The category-level surrogate for weak equivalence: restrict to every
// H-fixed subcategory and demand an equivalence there.
inline WeakGEquivReport check_weak_g_equivalence_surrogate(const GCategory& C,
                                                           const GCategory& D,
                                                           const Functor& F) {
  WeakGEquivReport rep;
  rep.equivariance_violation = equivariance_violation(C, D, F);
  if (rep.equivariance_violation) return rep;
  for (const auto& H : C.G.subgroups()) {
    auto VC = fixed_subcategory(C, H);
    auto VD = fixed_subcategory(D, H);
    Functor FH;
    for (int a : VC.obj_orig) {
      int img = VD.obj_sub[F.ob[a]];
      if (img < 0) throw Error("equivariant image of a fixed object is not fixed");
      FH.ob.push_back(img);
    }
    for (int f : VC.mor_orig) {
      int img = VD.mor_sub[F.mor[f]];
      if (img < 0) throw Error("equivariant image of a fixed morphism is not fixed");
      FH.mor.push_back(img);
    }
    rep.rows.push_back({H, check_equivalence(VC.cat, VD.cat, FH)});
  }
  return rep;
}

// The maximal subgroupoid: same objects, invertible morphisms only. The
// action restricts since functors preserve isos.
struct IsoSubGCategory {
  GCategory C;
  std::vector<int> mor_orig;  // sub morphism index -> parent index
  std::vector<int> mor_sub;   // parent index -> sub index or -1
};

inline IsoSubGCategory iso_gcategory(const GCategory& C) {
  IsoSubGCategory V;
  V.mor_sub.assign(C.cat.nmor(), -1);
  for (int f = 0; f < C.cat.nmor(); ++f)
    if (C.cat.is_iso(f)) {
      V.mor_sub[f] = static_cast<int>(V.mor_orig.size());
      V.mor_orig.push_back(f);
    }
  V.C.G = C.G;
  V.C.cat.nobj = C.cat.nobj;
  V.C.cat.obj_names = C.cat.obj_names;
  for (int f : V.mor_orig) {
    V.C.cat.src.push_back(C.cat.src[f]);
    V.C.cat.tgt.push_back(C.cat.tgt[f]);
    V.C.cat.mor_names.push_back(C.cat.mor_name(f));
  }
  for (int a = 0; a < C.cat.nobj; ++a) V.C.cat.idm.push_back(V.mor_sub[C.cat.idm[a]]);
  for (size_t gi = 0; gi < V.mor_orig.size(); ++gi)
    for (size_t fi = 0; fi < V.mor_orig.size(); ++fi) {
      int g = V.mor_orig[gi], f = V.mor_orig[fi];
      if (!C.cat.composable(g, f)) continue;
      V.C.cat.comp[{static_cast<int>(gi), static_cast<int>(fi)}] =
          V.mor_sub[C.cat.compose(g, f)];
    }
  V.C.obj_act = C.obj_act;
  V.C.mor_act.assign(C.G.n, std::vector<int>(V.mor_orig.size()));
  for (int g = 0; g < C.G.n; ++g)
    for (size_t fi = 0; fi < V.mor_orig.size(); ++fi)
      V.C.mor_act[g][fi] = V.mor_sub[C.mact(g, V.mor_orig[fi])];
  return V;
}

// Builders.

inline GCategory trivial_action_gcategory(FinCat cat, FiniteGroup G) {
  GCategory C;
  C.cat = std::move(cat);
  C.G = std::move(G);
  C.obj_act.assign(C.G.n, std::vector<int>(C.cat.nobj));
  C.mor_act.assign(C.G.n, std::vector<int>(C.cat.nmor()));
  for (int g = 0; g < C.G.n; ++g) {
    for (int a = 0; a < C.cat.nobj; ++a) C.obj_act[g][a] = a;
    for (int f = 0; f < C.cat.nmor(); ++f) C.mor_act[g][f] = f;
  }
  return C;
}

// Discrete category on n objects with G permuting them.
inline GCategory discrete_gcategory(int n, const FiniteGroup& G,
                                    const std::vector<std::vector<int>>& perm) {
  GCategory C;
  C.cat = discrete_category(n);
  C.G = G;
  C.obj_act = perm;
  C.mor_act = perm;  // morphisms are the identities, same indexing
  return C;
}

// A finite group P with G acting by group automorphisms, as a one-object
// G-category.
inline GCategory group_as_gcategory(const FiniteGroup& P, const FiniteGroup& G,
                                    const std::vector<std::vector<int>>& act) {
  GCategory C;
  C.cat = one_object_group_category(P);
  C.G = G;
  C.obj_act.assign(G.n, {0});
  C.mor_act = act;
  return C;
}

// The chaotic category on the elements of G: a unique morphism (h, g): g -> h,
// with G acting by left translation.
// The chaotic category on a finite G-set: one morphism between any two
// points, action induced by the permutation action perm[g][x].
inline GCategory chaotic_gcategory(int m, const FiniteGroup& G,
                                   const std::vector<std::vector<int>>& perm) {
  GCategory C;
  C.G = G;
  C.cat.nobj = m;
  auto mid = [&](int b, int a) { return b * m + a; };  // morphism a -> b
  for (int b = 0; b < m; ++b)
    for (int a = 0; a < m; ++a) {
      C.cat.src.push_back(a);
      C.cat.tgt.push_back(b);
      C.cat.mor_names.push_back("(" + std::to_string(b) + "<-" + std::to_string(a) + ")");
    }
  for (int a = 0; a < m; ++a) {
    C.cat.idm.push_back(mid(a, a));
    C.cat.obj_names.push_back("x" + std::to_string(a));
  }
  for (int c = 0; c < m; ++c)
    for (int b = 0; b < m; ++b)
      for (int a = 0; a < m; ++a) C.cat.comp[{mid(c, b), mid(b, a)}] = mid(c, a);
  C.obj_act = perm;
  C.mor_act.assign(G.n, std::vector<int>(m * m));
  for (int g = 0; g < G.n; ++g)
    for (int b = 0; b < m; ++b)
      for (int a = 0; a < m; ++a) C.mor_act[g][mid(b, a)] = mid(perm[g][b], perm[g][a]);
  return C;
}

inline GCategory make_chaotic(const FiniteGroup& G) {
  GCategory C;
  C.G = G;
  C.cat.nobj = G.n;
  auto mid = [&](int h, int g) { return h * G.n + g; };  // morphism g -> h
  for (int h = 0; h < G.n; ++h)
    for (int g = 0; g < G.n; ++g) {
      C.cat.src.push_back(g);
      C.cat.tgt.push_back(h);
      C.cat.mor_names.push_back("(" + G.name(h) + "<-" + G.name(g) + ")");
    }
  for (int g = 0; g < G.n; ++g) {
    C.cat.idm.push_back(mid(g, g));
    C.cat.obj_names.push_back(G.name(g));
  }
  for (int k = 0; k < G.n; ++k)
    for (int h = 0; h < G.n; ++h)
      for (int g = 0; g < G.n; ++g)
        C.cat.comp[{mid(k, h), mid(h, g)}] = mid(k, g);
  C.obj_act.assign(G.n, std::vector<int>(G.n));
  C.mor_act.assign(G.n, std::vector<int>(G.n * G.n));
  for (int a = 0; a < G.n; ++a) {
    for (int g = 0; g < G.n; ++g) C.obj_act[a][g] = G.mul(a, g);
    for (int h = 0; h < G.n; ++h)
      for (int g = 0; g < G.n; ++g)
        C.mor_act[a][mid(h, g)] = mid(G.mul(a, h), G.mul(a, g));
  }
  return C;
}

}  // namespace hofix
