#pragma once
// The exponential construction Cat(G~, C): functors from the chaotic
// category on G into a G-category C, with the translation action.
//
// A tilde object is a tuple of objects C_g together with isos
// psi_g: C_e -> C_g, psi_e = id (the remaining structure maps are
// psi_h . psi_g^{-1}). A tilde morphism is determined by its component
// at e, which can be any ambient morphism C_e -> C'_e.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "hofix/fincat.hpp"
#include "hofix/gcategory.hpp"

namespace hofix {

struct TildeObj {
  std::vector<int> cobj;
  std::vector<int> psi;
  auto operator<=>(const TildeObj&) const = default;
};

struct TildeCat {
  GCategory base;  // copy of the input G-category
  GCategory out;   // the exponential as a G-category
  std::vector<TildeObj> objects;
  std::vector<std::array<int, 3>> mor_data;  // {src obj, tgt obj, e-component}
  std::map<TildeObj, int> obj_index;
  std::map<std::array<int, 3>, int> mor_index;

  int find_object(const TildeObj& t) const {
    auto it = obj_index.find(t);
    return it == obj_index.end() ? -1 : it->second;
  }
};

inline TildeCat cat_tilde_g(const GCategory& C, const Budget& budget = Budget{}) {
  TildeCat T;
  T.base = C;
  T.out.G = C.G;
  const FinCat& cat = C.cat;
  const int n = C.G.n, e = C.G.e;

  std::vector<int> inv_of(cat.nmor(), -1);
  std::vector<std::vector<int>> isos_from(cat.nobj);
  for (int f = 0; f < cat.nmor(); ++f)
    if (auto i = cat.inverse_of(f)) {
      inv_of[f] = *i;
      isos_from[cat.src[f]].push_back(f);
    }
  std::vector<int> slots;
  for (int g = 0; g < n; ++g)
    if (g != e) slots.push_back(g);

  for (int ce = 0; ce < cat.nobj; ++ce) {
    const auto& pool = isos_from[ce];
    if (pool.empty() && !slots.empty()) continue;
    std::vector<size_t> pick(slots.size(), 0);
    bool more = true;
    while (more) {
      TildeObj t;
      t.cobj.assign(n, ce);
      t.psi.assign(n, cat.idm[ce]);
      std::string nm = "[" + cat.obj_name(ce);
      for (size_t s = 0; s < slots.size(); ++s) {
        int f = pool[pick[s]];
        t.psi[slots[s]] = f;
        t.cobj[slots[s]] = cat.tgt[f];
        nm += ";" + cat.mor_name(f);
      }
      nm += "]";
      budget.need_objects(static_cast<long long>(T.objects.size()) + 1,
                          "objects of the exponential category");
      T.obj_index[t] = static_cast<int>(T.objects.size());
      T.objects.push_back(std::move(t));
      T.out.cat.obj_names.push_back(std::move(nm));
      more = false;
      for (size_t s = pick.size(); s-- > 0;) {
        if (++pick[s] < pool.size()) {
          more = true;
          break;
        }
        pick[s] = 0;
      }
    }
  }
  const int nob = static_cast<int>(T.objects.size());
  T.out.cat.nobj = nob;

  std::vector<std::vector<std::vector<int>>> hom_by_pair(
      cat.nobj, std::vector<std::vector<int>>(cat.nobj));
  for (int f = 0; f < cat.nmor(); ++f) hom_by_pair[cat.src[f]][cat.tgt[f]].push_back(f);

  for (int i = 0; i < nob; ++i) {
    int cei = T.objects[i].cobj[e];
    for (int j = 0; j < nob; ++j) {
      int cej = T.objects[j].cobj[e];
      for (int u : hom_by_pair[cei][cej]) {
        budget.charge(1, "morphisms of the exponential category");
        std::array<int, 3> md{i, j, u};
        T.mor_index[md] = static_cast<int>(T.mor_data.size());
        T.mor_data.push_back(md);
        T.out.cat.src.push_back(i);
        T.out.cat.tgt.push_back(j);
        T.out.cat.mor_names.push_back("(" + cat.mor_name(u) + ")" + std::to_string(i) +
                                      ">" + std::to_string(j));
      }
    }
  }
  for (int i = 0; i < nob; ++i)
    T.out.cat.idm.push_back(T.mor_index.at({i, i, cat.idm[T.objects[i].cobj[e]]}));

  std::vector<std::vector<int>> out_of(nob), into(nob);
  for (int m = 0; m < static_cast<int>(T.mor_data.size()); ++m) {
    out_of[T.mor_data[m][0]].push_back(m);
    into[T.mor_data[m][1]].push_back(m);
  }
  for (int j = 0; j < nob; ++j)
    for (int m1 : into[j])
      for (int m2 : out_of[j]) {
        budget.charge(1, "composition table of the exponential category");
        int i = T.mor_data[m1][0], k = T.mor_data[m2][1];
        int u = cat.compose(T.mor_data[m2][2], T.mor_data[m1][2]);
        T.out.cat.comp[{m2, m1}] = T.mor_index.at({i, k, u});
      }

  T.out.obj_act.assign(n, std::vector<int>(nob));
  T.out.mor_act.assign(n, std::vector<int>(T.mor_data.size()));
  for (int g = 0; g < n; ++g) {
    int gi = C.G.inv(g);
    for (int i = 0; i < nob; ++i) {
      const TildeObj& t = T.objects[i];
      TildeObj s;
      s.cobj.resize(n);
      s.psi.resize(n);
      for (int h = 0; h < n; ++h) {
        int gh = C.G.mul(gi, h);
        s.cobj[h] = C.oact(g, t.cobj[gh]);
        s.psi[h] = C.mact(g, cat.compose(t.psi[gh], inv_of[t.psi[gi]]));
      }
      T.out.obj_act[g][i] = T.obj_index.at(s);
    }
    for (int m = 0; m < static_cast<int>(T.mor_data.size()); ++m) {
      auto [i, j, u] = T.mor_data[m];
      const TildeObj& ti = T.objects[i];
      const TildeObj& tj = T.objects[j];
      int up = C.mact(g, cat.compose(cat.compose(tj.psi[gi], u), inv_of[ti.psi[gi]]));
      T.out.mor_act[g][m] =
          T.mor_index.at({T.out.obj_act[g][i], T.out.obj_act[g][j], up});
    }
  }
  return T;
}

inline TildeObj constant_tilde_obj(const GCategory& C, int a) {
  TildeObj t;
  t.cobj.assign(C.G.n, a);
  t.psi.assign(C.G.n, C.cat.idm[a]);
  return t;
}

// The unit C -> Cat(G~, C): constant tuples with identity structure maps.
// It is strictly equivariant.
inline Functor iota_functor(const GCategory& C, const TildeCat& T) {
  Functor F;
  for (int a = 0; a < C.cat.nobj; ++a)
    F.ob.push_back(T.obj_index.at(constant_tilde_obj(C, a)));
  for (int f = 0; f < C.cat.nmor(); ++f)
    F.mor.push_back(T.mor_index.at({F.ob[C.cat.src[f]], F.ob[C.cat.tgt[f]], f}));
  return F;
}

// Homotopy fixed points over a subgroup, materialized directly: an object
// is (c, f) with f(h): h.c -> c, f(e) = id and f(ab) = f(a) . (a.f(b));
// the twisting forces every f(h) to be an iso, so only isos are tried.
// A morphism (c, f) -> (c', f') is an ambient alpha: c -> c' with
// f'(h) . (h.alpha) = alpha . f(h) for every h.
struct HofixObj {
  int c;
  std::vector<int> f;  // indexed by the subgroup's own element order
  auto operator<=>(const HofixObj&) const = default;
};

struct HofixCat {
  FiniteGroup H;           // the subgroup as a group in its own right
  std::vector<int> elems;  // subgroup index -> ambient group element
  FinCat cat;
  std::vector<HofixObj> objects;
  std::vector<std::array<int, 3>> mor_data;  // {src obj, tgt obj, component}
  std::map<std::array<int, 3>, int> mor_index;

  int find_object(const HofixObj& o) const {
    for (size_t i = 0; i < objects.size(); ++i)
      if (objects[i] == o) return static_cast<int>(i);
    return -1;
  }
};

inline HofixCat homotopy_fixed_points(const GCategory& C, const std::vector<int>& Helems,
                      const Budget& budget = Budget{}) {
  HofixCat X;
  auto HG = C.G.subgroup_as_group(Helems);
  X.H = HG.first;
  X.elems = HG.second;
  const FinCat& cat = C.cat;
  const int hn = X.H.n, he = X.H.e;

  std::vector<std::vector<std::vector<int>>> iso_by_pair(
      cat.nobj, std::vector<std::vector<int>>(cat.nobj));
  for (int f = 0; f < cat.nmor(); ++f)
    if (cat.is_iso(f)) iso_by_pair[cat.src[f]][cat.tgt[f]].push_back(f);

  std::vector<int> slots;
  for (int k = 0; k < hn; ++k)
    if (k != he) slots.push_back(k);

  for (int c = 0; c < cat.nobj; ++c) {
    std::vector<const std::vector<int>*> pool;
    bool feasible = true;
    for (int k : slots) {
      const auto& p = iso_by_pair[C.oact(X.elems[k], c)][c];
      if (p.empty()) feasible = false;
      pool.push_back(&p);
    }
    if (!feasible) continue;
    std::vector<size_t> pick(slots.size(), 0);
    bool more = true;
    while (more) {
      HofixObj o;
      o.c = c;
      o.f.assign(hn, cat.idm[c]);
      for (size_t s = 0; s < slots.size(); ++s) o.f[slots[s]] = (*pool[s])[pick[s]];
      budget.charge(hn * hn, "homotopy fixed point cocycle checks");
      bool ok = true;
      for (int a = 0; a < hn && ok; ++a)
        for (int b = 0; b < hn && ok; ++b)
          if (o.f[X.H.mul(a, b)] !=
              cat.compose(o.f[a], C.mact(X.elems[a], o.f[b])))
            ok = false;
      if (ok) {
        budget.need_objects(static_cast<long long>(X.objects.size()) + 1,
                            "homotopy fixed point objects");
        std::string nm = "(" + cat.obj_name(c);
        for (int k : slots) nm += ";" + cat.mor_name(o.f[k]);
        nm += ")";
        X.objects.push_back(std::move(o));
        X.cat.obj_names.push_back(std::move(nm));
      }
      more = false;
      for (size_t s = pick.size(); s-- > 0;) {
        if (++pick[s] < pool[s]->size()) {
          more = true;
          break;
        }
        pick[s] = 0;
      }
      if (slots.empty()) more = false;
    }
  }
  const int nob = static_cast<int>(X.objects.size());
  X.cat.nobj = nob;

  for (int i = 0; i < nob; ++i)
    for (int j = 0; j < nob; ++j) {
      const HofixObj& oi = X.objects[i];
      const HofixObj& oj = X.objects[j];
      for (int alpha = 0; alpha < cat.nmor(); ++alpha) {
        if (cat.src[alpha] != oi.c || cat.tgt[alpha] != oj.c) continue;
        budget.charge(hn, "homotopy fixed point morphism checks");
        bool ok = true;
        for (int k = 0; k < hn && ok; ++k)
          if (cat.compose(oj.f[k], C.mact(X.elems[k], alpha)) !=
              cat.compose(alpha, oi.f[k]))
            ok = false;
        if (!ok) continue;
        std::array<int, 3> md{i, j, alpha};
        X.mor_index[md] = static_cast<int>(X.mor_data.size());
        X.mor_data.push_back(md);
        X.cat.src.push_back(i);
        X.cat.tgt.push_back(j);
        X.cat.mor_names.push_back(cat.mor_name(alpha) + ":" + std::to_string(i) +
                                  ">" + std::to_string(j));
      }
    }
  for (int i = 0; i < nob; ++i)
    X.cat.idm.push_back(X.mor_index.at({i, i, cat.idm[X.objects[i].c]}));
  std::vector<std::vector<int>> out_of(nob), into(nob);
  for (int m = 0; m < static_cast<int>(X.mor_data.size()); ++m) {
    out_of[X.mor_data[m][0]].push_back(m);
    into[X.mor_data[m][1]].push_back(m);
  }
  for (int j = 0; j < nob; ++j)
    for (int m1 : into[j])
      for (int m2 : out_of[j]) {
        int i = X.mor_data[m1][0], k = X.mor_data[m2][1];
        int u = cat.compose(X.mor_data[m2][2], X.mor_data[m1][2]);
        X.cat.comp[{m2, m1}] = X.mor_index.at({i, k, u});
      }
  return X;
}

struct RestrictedGCategory {
  GCategory C;
  std::vector<int> elems;  // subgroup index -> ambient group element
};

inline RestrictedGCategory restrict_gcategory(const GCategory& C,
                                              const std::vector<int>& Helems) {
  RestrictedGCategory R;
  auto HG = C.G.subgroup_as_group(Helems);
  R.elems = HG.second;
  R.C.cat = C.cat;
  R.C.G = HG.first;
  for (int k = 0; k < R.C.G.n; ++k) {
    R.C.obj_act.push_back(C.obj_act[R.elems[k]]);
    R.C.mor_act.push_back(C.mor_act[R.elems[k]]);
  }
  return R;
}

// The defining comparison: homotopy fixed points over H coincide, via
// psi_h = f(h)^{-1}, with the strictly fixed subcategory of the
// exponential category of the H-restricted action. Returns true when the
// translation is a bijective functor.
inline bool hofix_matches_fixed_points(const GCategory& C,
                                       const std::vector<int>& Helems,
                                       const Budget& budget = Budget{}) {
  auto R = restrict_gcategory(C, Helems);
  TildeCat T = cat_tilde_g(R.C, budget);
  std::vector<int> allH(R.C.G.n);
  std::iota(allH.begin(), allH.end(), 0);
  SubcatView FX = fixed_subcategory(T.out, allH);
  HofixCat HF = homotopy_fixed_points(C, Helems, budget);
  if (static_cast<int>(HF.objects.size()) != FX.cat.nobj) return false;
  if (HF.mor_data.size() != FX.mor_orig.size()) return false;

  Functor W;
  std::vector<int> tilde_ob;
  for (const auto& o : HF.objects) {
    TildeObj t;
    t.cobj.resize(R.C.G.n);
    t.psi.resize(R.C.G.n);
    for (int k = 0; k < R.C.G.n; ++k) {
      t.cobj[k] = C.oact(R.elems[k], o.c);
      auto inv = C.cat.inverse_of(o.f[k]);
      if (!inv) return false;
      t.psi[k] = *inv;
    }
    int ti = T.find_object(t);
    if (ti < 0 || FX.obj_sub[ti] < 0) return false;
    tilde_ob.push_back(ti);
    W.ob.push_back(FX.obj_sub[ti]);
  }
  {
    auto s = W.ob;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  }
  for (const auto& md : HF.mor_data) {
    auto it = T.mor_index.find({tilde_ob[md[0]], tilde_ob[md[1]], md[2]});
    if (it == T.mor_index.end() || FX.mor_sub[it->second] < 0) return false;
    W.mor.push_back(FX.mor_sub[it->second]);
  }
  {
    auto s = W.mor;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  }
  return !functor_violation(HF.cat, FX.cat, W).has_value();
}

}  // namespace hofix
