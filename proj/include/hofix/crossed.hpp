#pragma once
// Groups with a G-action by automorphisms, nonabelian 1-cocycles
// f(gh) = f(g) . (g.f(h)), twisted-conjugacy classes, and the crossed
// morphism category whose objects are the cocycles.

#include <map>
#include <string>
#include <vector>

#include "hofix/fincat.hpp"
#include "hofix/gring.hpp"
#include "hofix/group.hpp"
#include "hofix/matrix.hpp"

namespace hofix {

struct GGroup {
  FiniteGroup P;
  FiniteGroup G;
  std::vector<std::vector<int>> act;  // act[g][x]

  int a(int g, int x) const { return act[g][x]; }
};

inline void validate_ggroup(const GGroup& W) {
  W.P.validate();
  W.G.validate();
  if (static_cast<int>(W.act.size()) != W.G.n)
    throw ValidationError("action table has wrong group size");
  for (int g = 0; g < W.G.n; ++g) {
    if (static_cast<int>(W.act[g].size()) != W.P.n)
      throw ValidationError("action table has wrong coefficient size");
    std::vector<char> seen(W.P.n, 0);
    for (int x = 0; x < W.P.n; ++x) {
      int y = W.act[g][x];
      if (y < 0 || y >= W.P.n || seen[y])
        throw ValidationError("action of " + W.G.name(g) + " is not a bijection");
      seen[y] = 1;
    }
    for (int x = 0; x < W.P.n; ++x)
      for (int y = 0; y < W.P.n; ++y)
        if (W.act[g][W.P.mul(x, y)] != W.P.mul(W.act[g][x], W.act[g][y]))
          throw ValidationError("action of " + W.G.name(g) +
                                " is not a group homomorphism");
  }
  for (int x = 0; x < W.P.n; ++x)
    if (W.act[W.G.e][x] != x)
      throw ValidationError("identity group element acts nontrivially");
  for (int g = 0; g < W.G.n; ++g)
    for (int h = 0; h < W.G.n; ++h)
      for (int x = 0; x < W.P.n; ++x)
        if (W.act[W.G.mul(g, h)][x] != W.act[g][W.act[h][x]])
          throw ValidationError("action fails to compose at (" + W.G.name(g) +
                                "," + W.G.name(h) + ")");
}

inline GGroup make_trivial_ggroup(FiniteGroup P, FiniteGroup G) {
  GGroup W;
  W.P = std::move(P);
  W.G = std::move(G);
  W.act.assign(W.G.n, std::vector<int>(W.P.n));
  for (int g = 0; g < W.G.n; ++g)
    for (int x = 0; x < W.P.n; ++x) W.act[g][x] = x;
  return W;
}

// The unit group of an equivariant ring, with the restricted action.
inline GGroup unit_group_ggroup(const GRing& gr) {
  std::vector<int> units;
  for (int r = 0; r < gr.R.n; ++r)
    if (gr.R.is_unit(r)) units.push_back(r);
  std::vector<int> pos(gr.R.n, -1);
  for (size_t i = 0; i < units.size(); ++i) pos[units[i]] = static_cast<int>(i);
  std::vector<std::string> names;
  for (int u : units) names.push_back(gr.R.name(u));
  GGroup W;
  W.P = make_group_from_mul(
      static_cast<int>(units.size()),
      [&](int i, int j) { return pos[gr.R.mul(units[i], units[j])]; },
      std::move(names));
  W.G = gr.G;
  W.act.assign(gr.G.n, std::vector<int>(W.P.n));
  for (int g = 0; g < gr.G.n; ++g)
    for (int i = 0; i < W.P.n; ++i) W.act[g][i] = pos[gr.act(g, units[i])];
  return W;
}

// GL_n of an equivariant ring in multiplication-table form. Only viable
// for small groups; the cap keeps the table quadratic in a sane range.
inline GGroup gl_as_ggroup(const GRing& gr, int n, const Budget& budget = Budget{},
                           int cap = 1500) {
  auto gls = enumerate_gl(gr.R, n, budget);
  if (static_cast<int>(gls.size()) > cap)
    throw Error("general linear group too large for table form (" +
                std::to_string(gls.size()) + " elements)");
  std::map<Mat, int> pos;
  std::vector<std::string> names;
  for (size_t i = 0; i < gls.size(); ++i) {
    pos[gls[i]] = static_cast<int>(i);
    names.push_back(mat_name(gr.R, gls[i]));
  }
  GGroup W;
  W.P = make_group_from_mul(
      static_cast<int>(gls.size()),
      [&](int i, int j) { return pos.at(mat_mul(gr.R, gls[i], gls[j])); },
      std::move(names));
  W.G = gr.G;
  W.act.assign(gr.G.n, std::vector<int>(W.P.n));
  for (int g = 0; g < gr.G.n; ++g)
    for (int i = 0; i < W.P.n; ++i) W.act[g][i] = pos.at(mat_act(gr, g, gls[i]));
  return W;
}

// All 1-cocycles G -> P, as value tuples indexed by group element.
inline std::vector<std::vector<int>> enumerate_group_cocycles(
    const GGroup& W, const Budget& budget = Budget{}) {
  const int n = W.G.n, e = W.G.e;
  std::vector<int> slots;
  for (int g = 0; g < n; ++g)
    if (g != e) slots.push_back(g);
  std::vector<std::vector<int>> out;
  std::vector<size_t> pick(slots.size(), 0);
  bool more = true;
  while (more) {
    std::vector<int> f(n, W.P.e);
    for (size_t s = 0; s < slots.size(); ++s) f[slots[s]] = static_cast<int>(pick[s]);
    budget.charge(n * n, "cocycle condition checks");
    bool ok = true;
    for (int g = 0; g < n && ok; ++g)
      for (int h = 0; h < n && ok; ++h)
        if (f[W.G.mul(g, h)] != W.P.mul(f[g], W.a(g, f[h]))) ok = false;
    if (ok) out.push_back(std::move(f));
    more = false;
    for (size_t s = pick.size(); s-- > 0;) {
      if (++pick[s] < static_cast<size_t>(W.P.n)) {
        more = true;
        break;
      }
      pick[s] = 0;
    }
    if (slots.empty()) more = false;
  }
  return out;
}

// Twist a cocycle by sigma: f'(g) = sigma . f(g) . (g.sigma)^{-1}.
inline std::vector<int> twist_cocycle(const GGroup& W, const std::vector<int>& f,
                                      int sigma) {
  std::vector<int> out(W.G.n);
  for (int g = 0; g < W.G.n; ++g)
    out[g] = W.P.mul(W.P.mul(sigma, f[g]), W.P.inv(W.a(g, sigma)));
  return out;
}

struct H1Result {
  std::vector<std::vector<int>> cocycles;  // sorted
  std::vector<int> class_of;
  std::vector<int> reps;  // first member of each class

  int num_cocycles() const { return static_cast<int>(cocycles.size()); }
  int num_classes() const { return static_cast<int>(reps.size()); }
  bool trivial() const { return num_classes() == 1; }

  int find(const std::vector<int>& f) const {
    auto it = std::lower_bound(cocycles.begin(), cocycles.end(), f);
    if (it == cocycles.end() || *it != f) return -1;
    return static_cast<int>(it - cocycles.begin());
  }
};

inline H1Result compute_h1(const GGroup& W, const Budget& budget = Budget{}) {
  H1Result res;
  res.cocycles = enumerate_group_cocycles(W, budget);
  std::sort(res.cocycles.begin(), res.cocycles.end());
  res.class_of.assign(res.cocycles.size(), -1);
  for (size_t i = 0; i < res.cocycles.size(); ++i) {
    if (res.class_of[i] >= 0) continue;
    int cls = static_cast<int>(res.reps.size());
    res.reps.push_back(static_cast<int>(i));
    for (int sigma = 0; sigma < W.P.n; ++sigma) {
      budget.charge(W.G.n, "cocycle twisting");
      int j = res.find(twist_cocycle(W, res.cocycles[i], sigma));
      if (j < 0) throw Error("twist left the cocycle set");
      if (res.class_of[j] >= 0 && res.class_of[j] != cls)
        throw Error("twisting merged two classes");
      res.class_of[j] = cls;
    }
  }
  return res;
}

// The crossed morphism category: objects are cocycles, a morphism
// alpha -> beta is sigma with beta(g) . (g.sigma) = sigma . alpha(g);
// composition is multiplication in P.
struct CrossedCat {
  FinCat cat;
  std::vector<std::vector<int>> cocycles;
  std::vector<std::array<int, 3>> mor_data;  // {src obj, tgt obj, sigma}
  std::map<std::array<int, 3>, int> mor_index;
};

inline CrossedCat crossed_category(const GGroup& W, const Budget& budget = Budget{}) {
  CrossedCat X;
  X.cocycles = enumerate_group_cocycles(W, budget);
  std::sort(X.cocycles.begin(), X.cocycles.end());
  const int nob = static_cast<int>(X.cocycles.size());
  budget.need_objects(nob, "crossed category objects");
  X.cat.nobj = nob;
  for (int i = 0; i < nob; ++i) {
    std::string nm = "(";
    for (int g = 0; g < W.G.n; ++g) {
      if (g) nm += ",";
      nm += W.P.name(X.cocycles[i][g]);
    }
    X.cat.obj_names.push_back(nm + ")");
  }
  for (int i = 0; i < nob; ++i)
    for (int j = 0; j < nob; ++j)
      for (int sigma = 0; sigma < W.P.n; ++sigma) {
        budget.charge(W.G.n, "crossed morphism checks");
        bool ok = true;
        for (int g = 0; g < W.G.n && ok; ++g)
          if (W.P.mul(X.cocycles[j][g], W.a(g, sigma)) !=
              W.P.mul(sigma, X.cocycles[i][g]))
            ok = false;
        if (!ok) continue;
        std::array<int, 3> md{i, j, sigma};
        X.mor_index[md] = static_cast<int>(X.mor_data.size());
        X.mor_data.push_back(md);
        X.cat.src.push_back(i);
        X.cat.tgt.push_back(j);
        X.cat.mor_names.push_back(W.P.name(sigma) + ":" + std::to_string(i) + ">" +
                                  std::to_string(j));
      }
  for (int i = 0; i < nob; ++i) X.cat.idm.push_back(X.mor_index.at({i, i, W.P.e}));
  for (int m2 = 0; m2 < static_cast<int>(X.mor_data.size()); ++m2)
    for (int m1 = 0; m1 < static_cast<int>(X.mor_data.size()); ++m1) {
      if (X.mor_data[m2][0] != X.mor_data[m1][1]) continue;
      X.cat.comp[{m2, m1}] = X.mor_index.at(
          {X.mor_data[m1][0], X.mor_data[m2][1],
           W.P.mul(X.mor_data[m2][2], X.mor_data[m1][2])});
    }
  return X;
}

// Restrict the acting group to a subgroup (element list in the big group).
inline GGroup restrict_ggroup(const GGroup& W, const std::vector<int>& Helems) {
  auto HG = W.G.subgroup_as_group(Helems);
  GGroup V;
  V.P = W.P;
  V.G = HG.first;
  for (int k = 0; k < V.G.n; ++k) V.act.push_back(W.act[HG.second[k]]);
  return V;
}

}  // namespace hofix
