#pragma once
// Semilinear module structures on R^n for a subgroup H: cocycles
// f: H -> GL_n(R) with f(h1 h2) = f(h1) (f(h2))^{h1} and f(e) = I,
// classified up to twisted conjugacy f'(h) = B f(h) (B^h)^{-1}.
//
// Enumeration assigns values on a minimal generating set and propagates; a
// dedicated DFS over matrix entries handles the one case where the entry
// space is too large to sweep (order-2 generator, A A^sigma = I). Orbits are
// computed either by one pass over all of GL or by BFS over elementary
// generators when GL itself is out of reach.

#include <algorithm>
#include <optional>
#include <vector>

#include "hofix/common.hpp"
#include "hofix/gring.hpp"
#include "hofix/group.hpp"
#include "hofix/matrix.hpp"

namespace hofix {

struct Cocycle {
  std::vector<Mat> f;  // indexed by the subgroup's own element order
  auto operator<=>(const Cocycle&) const = default;
};

inline Cocycle trivial_cocycle(const FiniteRing& R, int subgroup_order, int n) {
  Cocycle c;
  c.f.assign(subgroup_order, mat_eye(R, n));
  return c;
}

inline Cocycle cocycle_block_sum(const FiniteRing& R, const Cocycle& a,
                                 const Cocycle& b) {
  if (a.f.size() != b.f.size()) throw Error("block sum of cocycles over different subgroups");
  Cocycle c;
  c.f.reserve(a.f.size());
  for (size_t h = 0; h < a.f.size(); ++h)
    c.f.push_back(block_sum(R, a.f[h], b.f[h]));
  return c;
}

inline bool is_cocycle(const GRing& gr, const FiniteGroup& H,
                       const std::vector<int>& elems, const Cocycle& c) {
  if (static_cast<int>(c.f.size()) != H.n) return false;
  if (c.f[H.e] != mat_eye(gr.R, c.f[H.e].rows)) return false;
  for (int a = 0; a < H.n; ++a)
    for (int b = 0; b < H.n; ++b) {
      Mat rhs = mat_mul(gr.R, c.f[a], mat_act(gr, elems[a], c.f[b]));
      if (c.f[H.mul(a, b)] != rhs) return false;
    }
  return true;
}

struct SemilinearClasses {
  FiniteGroup H;           // the subgroup as its own group
  std::vector<int> elems;  // H index -> parent group element
  int rank = 0;
  std::vector<Cocycle> cocycles;  // sorted
  std::vector<int> class_of;      // cocycle index -> class index
  std::vector<int> reps;          // class index -> index of its lex-min cocycle

  int num_classes() const { return static_cast<int>(reps.size()); }
  int find(const Cocycle& c) const {
    auto it = std::lower_bound(cocycles.begin(), cocycles.end(), c);
    if (it == cocycles.end() || !(*it == c)) return -1;
    return static_cast<int>(it - cocycles.begin());
  }
  int classify(const Cocycle& c) const {
    int i = find(c);
    if (i < 0) throw Error("cocycle not in the enumerated set");
    return class_of[i];
  }
};

namespace detail {

// DFS over the entries of A subject to A (A^sigma) = I, for an order-2
// generator. Cells are filled row 0, column 0 tail, row 1 tail, ...; the
// product entry (i, j) is tested as soon as row i and column j are complete.
inline void dfs_order2_cocycles(const GRing& gr, int sigma_parent, int n,
                                const Budget& budget, std::vector<Mat>& out) {
  const FiniteRing& R = gr.R;
  std::vector<std::pair<int, int>> order;
  for (int t = 0; t < n; ++t) {
    for (int j = t; j < n; ++j) order.push_back({t, j});
    for (int i = t + 1; i < n; ++i) order.push_back({i, t});
  }
  Mat A(n, n, R.zero);
  std::vector<int> rowfill(n, 0), colfill(n, 0);
  auto entry_ok = [&](int i, int j) {
    int s = R.zero;
    for (int k = 0; k < n; ++k)
      s = R.add(s, R.mul(A.at(i, k), gr.act(sigma_parent, A.at(k, j))));
    return s == (i == j ? R.one : R.zero);
  };
  auto checks_pass = [&](int r, int c) {
    if (rowfill[r] == n)
      for (int j = 0; j < n; ++j)
        if (colfill[j] == n && !entry_ok(r, j)) return false;
    if (colfill[c] == n)
      for (int i = 0; i < n; ++i)
        if (rowfill[i] == n && !(i == r && rowfill[r] == n) && !entry_ok(i, c))
          return false;
    return true;
  };
  auto rec = [&](auto&& self, size_t depth) -> void {
    if (depth == order.size()) {
      out.push_back(A);
      return;
    }
    auto [r, c] = order[depth];
    for (int v = 0; v < R.n; ++v) {
      budget.charge(n, "semilinear DFS enumeration");
      A.at(r, c) = v;
      ++rowfill[r];
      ++colfill[c];
      if (checks_pass(r, c)) self(self, depth + 1);
      --rowfill[r];
      --colfill[c];
    }
    A.at(r, c) = R.zero;
  };
  rec(rec, 0);
}

}  // namespace detail

inline SemilinearClasses enumerate_semilinear_structures(
    const GRing& gr, std::vector<int> Helems, int n,
    const Budget& budget = Budget{}) {
  const FiniteRing& R = gr.R;
  std::sort(Helems.begin(), Helems.end());
  auto [H, elems] = gr.G.subgroup_as_group(Helems);
  SemilinearClasses out;
  out.H = H;
  out.elems = elems;
  out.rank = n;

  std::vector<int> allh(H.n);
  for (int i = 0; i < H.n; ++i) allh[i] = i;
  std::vector<int> gens = H.minimal_generators(allh);

  if (gens.empty()) {  // trivial subgroup: only the empty constraint
    out.cocycles.push_back(trivial_cocycle(R, H.n, n));
    out.class_of = {0};
    out.reps = {0};
    return out;
  }

  long long cells = 1;
  bool cells_big = false;
  for (int k = 0; k < n * n; ++k) {
    cells *= R.n;
    if (cells > 2'000'000) {
      cells_big = true;
      break;
    }
  }

  if (cells_big && !(H.n == 2 && gens.size() == 1)) {
    throw BudgetError("semilinear enumeration out of reach: entry space " +
                      std::string("exceeds 2e6 and no order-2 shortcut applies"));
  }

  std::vector<Mat> gl;
  if (cells_big) {
    std::vector<Mat> sols;
    detail::dfs_order2_cocycles(gr, elems[1], n, budget, sols);
    for (auto& A : sols) {
      Cocycle c;
      c.f = {mat_eye(R, n), A};
      out.cocycles.push_back(std::move(c));
    }
  } else {
    gl = enumerate_gl(R, n, budget);
    int k = static_cast<int>(gens.size());
    long long total = 1;
    for (int i = 0; i < k; ++i) {
      total *= static_cast<long long>(gl.size());
      if (total > 100'000'000) throw BudgetError("semilinear generator tuple space too large");
    }
    std::vector<size_t> tuple(k, 0);
    std::vector<std::optional<Mat>> f(H.n);
    for (long long step = 0; step < total; ++step) {
      budget.charge(H.n, "semilinear cocycle propagation");
      for (auto& x : f) x.reset();
      f[H.e] = mat_eye(R, n);
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        auto& slot = f[gens[i]];
        if (slot && !(*slot == gl[tuple[i]])) ok = false;
        slot = gl[tuple[i]];
      }
      bool changed = ok;
      while (changed && ok) {
        changed = false;
        for (int a = 0; a < H.n && ok; ++a) {
          if (!f[a]) continue;
          for (int b = 0; b < H.n; ++b) {
            if (!f[b]) continue;
            Mat v = mat_mul(R, *f[a], mat_act(gr, elems[a], *f[b]));
            auto& slot = f[H.mul(a, b)];
            if (!slot) {
              slot = std::move(v);
              changed = true;
            } else if (!(*slot == v)) {
              ok = false;
              break;
            }
          }
        }
      }
      if (ok) {
        bool complete = std::all_of(f.begin(), f.end(),
                                    [](const auto& x) { return bool(x); });
        if (complete) {
          Cocycle c;
          for (auto& x : f) c.f.push_back(*x);
          out.cocycles.push_back(std::move(c));
        }
      }
      for (int i = k - 1; i >= 0; --i) {
        if (++tuple[i] < gl.size()) break;
        tuple[i] = 0;
      }
    }
  }

  std::sort(out.cocycles.begin(), out.cocycles.end());
  out.cocycles.erase(std::unique(out.cocycles.begin(), out.cocycles.end()),
                     out.cocycles.end());

  // Orbits of twisted conjugacy. One pass over GL reaches the whole orbit
  // from any member; otherwise BFS over the elementary generator set (closed
  // under inverses, so components equal orbits).
  int m = static_cast<int>(out.cocycles.size());
  out.class_of.assign(m, -1);
  bool gl_pass = !gl.empty() && gl.size() <= 250'000;
  std::vector<std::pair<Mat, Mat>> movers;  // generator with its inverse
  if (!gl_pass)
    for (const Mat& B : gl_generators(R, n))
      movers.push_back({B, *mat_inv(R, B)});

  auto twist = [&](const Cocycle& c, const Mat& B, const Mat& Binv) {
    Cocycle d;
    d.f.reserve(H.n);
    for (int h = 0; h < H.n; ++h)
      d.f.push_back(mat_mul(R, mat_mul(R, B, c.f[h]), mat_act(gr, elems[h], Binv)));
    return d;
  };

  for (int i = 0; i < m; ++i) {
    if (out.class_of[i] >= 0) continue;
    int cls = static_cast<int>(out.reps.size());
    out.reps.push_back(i);
    out.class_of[i] = cls;
    if (gl_pass) {
      for (const Mat& B : gl) {
        budget.charge(H.n * (n * n + 1), "twisted conjugacy sweep");
        auto Binv = mat_inv(R, B);
        Cocycle img = twist(out.cocycles[i], B, *Binv);
        int j = out.find(img);
        if (j < 0) throw Error("twisted conjugate escaped the enumerated set");
        out.class_of[j] = cls;
      }
    } else {
      std::vector<int> queue = {i};
      while (!queue.empty()) {
        int cur = queue.back();
        queue.pop_back();
        for (const auto& [B, Binv] : movers) {
          budget.charge(H.n * (n * n + 1), "twisted conjugacy BFS");
          Cocycle img = twist(out.cocycles[cur], B, Binv);
          int j = out.find(img);
          if (j < 0) throw Error("twisted conjugate escaped the enumerated set");
          if (out.class_of[j] < 0) {
            out.class_of[j] = cls;
            queue.push_back(j);
          }
        }
      }
    }
  }
  return out;
}

// The cocycle over gHg^{-1} with B_k = (A_{g^{-1} k g})^g, realizing
// conjugation of semilinear structures. Returns the sorted element list of
// the conjugate subgroup together with the transported cocycle.
inline std::pair<std::vector<int>, Cocycle> conjugate_cocycle(
    const GRing& gr, const std::vector<int>& Helems, const Cocycle& c, int g) {
  const FiniteGroup& G = gr.G;
  std::vector<int> Kelems = G.conj_subgroup(g, Helems);
  auto [K, kelems] = G.subgroup_as_group(Kelems);
  auto [H, helems] = G.subgroup_as_group(Helems);
  if (static_cast<int>(c.f.size()) != H.n)
    throw Error("cocycle size does not match subgroup");
  Cocycle d;
  d.f.resize(K.n);
  int ginv = G.inv(g);
  for (int ki = 0; ki < K.n; ++ki) {
    int h = G.mul(ginv, G.mul(kelems[ki], g));
    int hi = -1;
    for (int t = 0; t < H.n; ++t)
      if (helems[t] == h) hi = t;
    if (hi < 0) throw Error("conjugation index bookkeeping failed");
    d.f[ki] = mat_act(gr, g, c.f[hi]);
  }
  return {kelems, d};
}

}  // namespace hofix
