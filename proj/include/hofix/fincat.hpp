#pragma once
// Finite categories with explicit composition tables, functors, natural
// transformations, equivalence checking, and component/iso-class partitions.
// Morphisms are global indices with src/tgt tables; composition is stored
// sparsely on composable pairs only.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hofix/common.hpp"
#include "hofix/group.hpp"

namespace hofix {

struct FinCat {
  int nobj = 0;
  std::vector<int> src, tgt;  // per morphism
  std::vector<int> idm;       // per object, its identity morphism
  std::map<std::pair<int, int>, int> comp;  // (after, first) -> composite
  std::vector<std::string> obj_names, mor_names;

  int nmor() const { return static_cast<int>(src.size()); }
  bool composable(int g, int f) const { return src[g] == tgt[f]; }
  int compose(int g, int f) const {
    auto it = comp.find({g, f});
    if (it == comp.end()) throw Error("composing non-composable morphisms");
    return it->second;
  }
  std::string mor_name(int f) const {
    return f < static_cast<int>(mor_names.size()) && !mor_names[f].empty()
               ? mor_names[f]
               : "m" + std::to_string(f);
  }
  std::string obj_name(int a) const {
    return a < static_cast<int>(obj_names.size()) && !obj_names[a].empty()
               ? obj_names[a]
               : "c" + std::to_string(a);
  }

  std::vector<int> hom(int a, int b) const {
    std::vector<int> out;
    for (int f = 0; f < nmor(); ++f)
      if (src[f] == a && tgt[f] == b) out.push_back(f);
    return out;
  }

  std::optional<int> inverse_of(int f) const {
    for (int g : hom(tgt[f], src[f]))
      if (compose(g, f) == idm[src[f]] && compose(f, g) == idm[tgt[f]]) return g;
    return std::nullopt;
  }
  bool is_iso(int f) const { return inverse_of(f).has_value(); }

  void validate(const Budget& budget = Budget{}) const {
    if (static_cast<int>(idm.size()) != nobj)
      throw ValidationError("identity table size mismatch");
    if (src.size() != tgt.size()) throw ValidationError("src/tgt size mismatch");
    for (int a = 0; a < nobj; ++a) {
      int i = idm[a];
      if (i < 0 || i >= nmor() || src[i] != a || tgt[i] != a)
        throw ValidationError("identity of " + obj_name(a) + " is not an endomorphism");
    }
    for (const auto& [key, h] : comp) {
      auto [g, f] = key;
      if (g < 0 || g >= nmor() || f < 0 || f >= nmor() || h < 0 || h >= nmor())
        throw ValidationError("composition table index out of range");
      if (!composable(g, f))
        throw ValidationError("composition stored for non-composable pair (" +
                              mor_name(g) + "," + mor_name(f) + ")");
      if (src[h] != src[f] || tgt[h] != tgt[g])
        throw ValidationError("composite " + mor_name(h) + " has wrong endpoints");
    }
    for (int g = 0; g < nmor(); ++g)
      for (int f = 0; f < nmor(); ++f) {
        budget.charge(1, "category validation");
        if (!composable(g, f)) continue;
        if (!comp.count({g, f}))
          throw ValidationError("missing composite of (" + mor_name(g) + "," +
                                mor_name(f) + ")");
      }
    for (int f = 0; f < nmor(); ++f) {
      if (compose(f, idm[src[f]]) != f || compose(idm[tgt[f]], f) != f)
        throw ValidationError("identity law fails at " + mor_name(f));
    }
    for (int h = 0; h < nmor(); ++h)
      for (int g = 0; g < nmor(); ++g) {
        if (!composable(h, g)) continue;
        int hg = compose(h, g);
        for (int f = 0; f < nmor(); ++f) {
          if (!composable(g, f)) continue;
          budget.charge(1, "associativity validation");
          if (compose(hg, f) != compose(h, compose(g, f)))
            throw ValidationError("associativity fails at (" + mor_name(h) + "," +
                                  mor_name(g) + "," + mor_name(f) + ")");
        }
      }
  }
};

// Union-find partitions. Returns class index per object, classes numbered by
// first appearance.
namespace detail {
struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) {
    for (int i = 0; i < n; ++i) p[i] = i;
  }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
  std::vector<int> classes() {
    std::vector<int> cls(p.size(), -1);
    int next = 0;
    for (size_t i = 0; i < p.size(); ++i) {
      int r = find(static_cast<int>(i));
      if (cls[r] < 0) cls[r] = next++;
      cls[i] = cls[r];
    }
    return cls;
  }
};
}  // namespace detail

// Zigzag components: objects joined by any morphism.
inline std::vector<int> connected_components(const FinCat& C) {
  detail::UnionFind uf(C.nobj);
  for (int f = 0; f < C.nmor(); ++f) uf.unite(C.src[f], C.tgt[f]);
  return uf.classes();
}

// Isomorphism classes of objects.
inline std::vector<int> iso_classes(const FinCat& C) {
  detail::UnionFind uf(C.nobj);
  for (int f = 0; f < C.nmor(); ++f)
    if (C.src[f] != C.tgt[f] && C.is_iso(f)) uf.unite(C.src[f], C.tgt[f]);
  return uf.classes();
}

inline int num_iso_classes(const FinCat& C) {
  auto cls = iso_classes(C);
  return cls.empty() ? 0 : 1 + *std::max_element(cls.begin(), cls.end());
}

// Full subcategory on a subset of objects, with index translation maps.
struct FullSubcat {
  FinCat cat;
  std::vector<int> obj_orig, mor_orig;  // sub index -> parent index
  std::vector<int> obj_sub, mor_sub;    // parent index -> sub index or -1
};

inline FullSubcat full_subcategory(const FinCat& C, const std::vector<int>& objs) {
  FullSubcat V;
  V.obj_sub.assign(C.nobj, -1);
  V.mor_sub.assign(C.nmor(), -1);
  for (int a : objs) {
    V.obj_sub[a] = static_cast<int>(V.obj_orig.size());
    V.obj_orig.push_back(a);
  }
  V.cat.nobj = static_cast<int>(objs.size());
  for (int f = 0; f < C.nmor(); ++f) {
    if (V.obj_sub[C.src[f]] < 0 || V.obj_sub[C.tgt[f]] < 0) continue;
    V.mor_sub[f] = static_cast<int>(V.mor_orig.size());
    V.mor_orig.push_back(f);
    V.cat.src.push_back(V.obj_sub[C.src[f]]);
    V.cat.tgt.push_back(V.obj_sub[C.tgt[f]]);
    V.cat.mor_names.push_back(C.mor_name(f));
  }
  for (int a : V.obj_orig) {
    V.cat.idm.push_back(V.mor_sub[C.idm[a]]);
    V.cat.obj_names.push_back(C.obj_name(a));
  }
  for (size_t gi = 0; gi < V.mor_orig.size(); ++gi)
    for (size_t fi = 0; fi < V.mor_orig.size(); ++fi) {
      int g = V.mor_orig[gi], f = V.mor_orig[fi];
      if (!C.composable(g, f)) continue;
      V.cat.comp[{static_cast<int>(gi), static_cast<int>(fi)}] =
          V.mor_sub[C.compose(g, f)];
    }
  return V;
}

struct Functor {
  std::vector<int> ob;   // source object -> target object
  std::vector<int> mor;  // source morphism -> target morphism
  auto operator<=>(const Functor&) const = default;
};

inline Functor identity_functor(const FinCat& C) {
  Functor F;
  F.ob.resize(C.nobj);
  F.mor.resize(C.nmor());
  for (int a = 0; a < C.nobj; ++a) F.ob[a] = a;
  for (int f = 0; f < C.nmor(); ++f) F.mor[f] = f;
  return F;
}

inline std::optional<std::string> functor_violation(const FinCat& C,
                                                    const FinCat& D,
                                                    const Functor& F) {
  if (static_cast<int>(F.ob.size()) != C.nobj ||
      static_cast<int>(F.mor.size()) != C.nmor())
    return "functor table sizes do not match the source category";
  for (int a = 0; a < C.nobj; ++a)
    if (F.ob[a] < 0 || F.ob[a] >= D.nobj) return "object image out of range";
  for (int f = 0; f < C.nmor(); ++f) {
    if (F.mor[f] < 0 || F.mor[f] >= D.nmor()) return "morphism image out of range";
    if (D.src[F.mor[f]] != F.ob[C.src[f]] || D.tgt[F.mor[f]] != F.ob[C.tgt[f]])
      return "image of " + C.mor_name(f) + " has wrong endpoints";
  }
  for (int a = 0; a < C.nobj; ++a)
    if (F.mor[C.idm[a]] != D.idm[F.ob[a]])
      return "identity of " + C.obj_name(a) + " not preserved";
  for (int g = 0; g < C.nmor(); ++g)
    for (int f = 0; f < C.nmor(); ++f) {
      if (!C.composable(g, f)) continue;
      if (F.mor[C.compose(g, f)] != D.compose(F.mor[g], F.mor[f]))
        return "composition of (" + C.mor_name(g) + "," + C.mor_name(f) +
               ") not preserved";
    }
  return std::nullopt;
}

inline bool is_functor(const FinCat& C, const FinCat& D, const Functor& F) {
  return !functor_violation(C, D, F).has_value();
}

inline Functor compose_functors(const Functor& G, const Functor& F) {
  // G after F
  Functor H;
  H.ob.resize(F.ob.size());
  H.mor.resize(F.mor.size());
  for (size_t a = 0; a < F.ob.size(); ++a) H.ob[a] = G.ob[F.ob[a]];
  for (size_t f = 0; f < F.mor.size(); ++f) H.mor[f] = G.mor[F.mor[f]];
  return H;
}

// eta[a]: F(a) -> G(a) in D.
inline bool is_natural(const FinCat& C, const FinCat& D, const Functor& F,
                       const Functor& G, const std::vector<int>& eta) {
  if (static_cast<int>(eta.size()) != C.nobj) return false;
  for (int a = 0; a < C.nobj; ++a)
    if (D.src[eta[a]] != F.ob[a] || D.tgt[eta[a]] != G.ob[a]) return false;
  for (int f = 0; f < C.nmor(); ++f)
    if (D.compose(G.mor[f], eta[C.src[f]]) != D.compose(eta[C.tgt[f]], F.mor[f]))
      return false;
  return true;
}

inline bool naturally_isomorphic(const FinCat& C, const FinCat& D,
                                 const Functor& F, const Functor& G) {
  // search for a natural iso componentwise; hom sets are tiny here
  std::vector<std::vector<int>> cand(C.nobj);
  for (int a = 0; a < C.nobj; ++a) {
    for (int f : D.hom(F.ob[a], G.ob[a]))
      if (D.is_iso(f)) cand[a].push_back(f);
    if (cand[a].empty()) return false;
  }
  std::vector<size_t> pick(C.nobj, 0);
  while (true) {
    std::vector<int> eta(C.nobj);
    for (int a = 0; a < C.nobj; ++a) eta[a] = cand[a][pick[a]];
    if (is_natural(C, D, F, G, eta)) return true;
    int k = C.nobj - 1;
    while (k >= 0) {
      if (++pick[k] < cand[k].size()) break;
      pick[k] = 0;
      --k;
    }
    if (k < 0) return false;
  }
}

struct EquivReport {
  std::optional<std::string> functor_violation;
  bool essentially_surjective = false;
  bool full = false;
  bool faithful = false;
  bool ok() const {
    return !functor_violation && essentially_surjective && full && faithful;
  }
};

inline EquivReport check_equivalence(const FinCat& C, const FinCat& D,
                                     const Functor& F) {
  EquivReport rep;
  rep.functor_violation = functor_violation(C, D, F);
  if (rep.functor_violation) return rep;
  auto dcls = iso_classes(D);
  std::vector<char> hit(D.nobj ? 1 + *std::max_element(dcls.begin(), dcls.end()) : 0, 0);
  for (int a = 0; a < C.nobj; ++a) hit[dcls[F.ob[a]]] = 1;
  rep.essentially_surjective =
      std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  rep.full = true;
  rep.faithful = true;
  for (int a = 0; a < C.nobj; ++a)
    for (int b = 0; b < C.nobj; ++b) {
      auto source_hom = C.hom(a, b);
      auto target_hom = D.hom(F.ob[a], F.ob[b]);
      std::vector<int> images;
      for (int f : source_hom) images.push_back(F.mor[f]);
      std::sort(images.begin(), images.end());
      if (std::adjacent_find(images.begin(), images.end()) != images.end())
        rep.faithful = false;
      images.erase(std::unique(images.begin(), images.end()), images.end());
      for (int h : target_hom)
        if (!std::binary_search(images.begin(), images.end(), h)) {
          rep.full = false;
          break;
        }
    }
  return rep;
}

// Builders.

inline FinCat discrete_category(int n) {
  FinCat C;
  C.nobj = n;
  for (int a = 0; a < n; ++a) {
    C.src.push_back(a);
    C.tgt.push_back(a);
    C.idm.push_back(a);
    C.comp[{a, a}] = a;
  }
  return C;
}

// One object, morphisms a finite group under its multiplication.
inline FinCat one_object_group_category(const FiniteGroup& P) {
  FinCat C;
  C.nobj = 1;
  C.src.assign(P.n, 0);
  C.tgt.assign(P.n, 0);
  C.idm = {P.e};
  for (int g = 0; g < P.n; ++g)
    for (int f = 0; f < P.n; ++f) C.comp[{g, f}] = P.mul(g, f);
  C.mor_names = P.names;
  return C;
}

// The category of a finite preorder: one morphism a -> b when leq[a][b].
// leq must be reflexive and transitive.
inline FinCat poset_category(const std::vector<std::vector<bool>>& leq) {
  int n = static_cast<int>(leq.size());
  FinCat C;
  C.nobj = n;
  std::vector<std::vector<int>> midx(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a) {
    if (!leq[a][a]) throw ValidationError("preorder is not reflexive");
    for (int b = 0; b < n; ++b) {
      if (!leq[a][b]) continue;
      midx[a][b] = C.nmor();
      C.src.push_back(a);
      C.tgt.push_back(b);
      C.mor_names.push_back("(" + std::to_string(a) + "<=" + std::to_string(b) + ")");
    }
  }
  for (int a = 0; a < n; ++a) C.idm.push_back(midx[a][a]);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!leq[a][b]) continue;
      for (int c = 0; c < n; ++c) {
        if (!leq[b][c]) continue;
        if (!leq[a][c]) throw ValidationError("preorder is not transitive");
        C.comp[{midx[b][c], midx[a][b]}] = midx[a][c];
      }
    }
  return C;
}

inline bool objects_isomorphic(const FinCat& C, int a, int b) {
  if (a == b) return true;
  for (int f : C.hom(a, b))
    if (C.is_iso(f)) return true;
  return false;
}

// All isos a -> b.
inline std::vector<int> iso_set(const FinCat& C, int a, int b) {
  std::vector<int> out;
  for (int f : C.hom(a, b))
    if (C.is_iso(f)) out.push_back(f);
  return out;
}

}  // namespace hofix
