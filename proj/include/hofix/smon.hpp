#pragma once
// The pi0 monoid of the truncated tower of semilinear modules: iso classes
// of rank <= N twisted descent data over a subgroup H, under block sum.
// Indecomposables are found by brute-force splitting, and the monoid is
// certified free on them (unique multiset decomposition) whenever that
// holds at the given truncation.
//
// Also: transfer (induction) and restriction of cocycles between subgroup
// levels, conjugation, and an independent conjugacy-class enumeration of
// group homomorphisms into GL_n used as an oracle for trivial actions.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hofix/semilinear.hpp"

namespace hofix {

struct Pi0Monoid {
  GRing gr;
  std::vector<int> Helems;  // sorted parent-group elements
  int N = 0;
  std::vector<SemilinearClasses> levels;    // index = rank, 0..N
  std::vector<std::pair<int, int>> ids;     // id -> (rank, class within rank)
  std::vector<std::vector<int>> id_at;      // rank -> class -> id
  std::vector<int> indecomposables;         // ids of rank >= 1
  bool free = false;                        // unique decomposition verified
  std::vector<std::vector<int>> decomp;     // id -> indec multiplicities (when free)

  int num_ids() const { return static_cast<int>(ids.size()); }
  int zero_id() const { return id_at[0][0]; }
  int rank_of(int id) const { return ids[id].first; }

  const Cocycle& rep(int id) const {
    const SemilinearClasses& L = levels[ids[id].first];
    return L.cocycles[L.reps[ids[id].second]];
  }

  int classify_cocycle(int rank, const Cocycle& c) const {
    if (rank < 0 || rank > N) throw Error("rank outside the truncation");
    return id_at[rank][levels[rank].classify(c)];
  }

  // Block sum on classes; -1 when the result exceeds the truncation.
  int add(int a, int b) const {
    int r = rank_of(a) + rank_of(b);
    if (r > N) return -1;
    return classify_cocycle(r, cocycle_block_sum(gr.R, rep(a), rep(b)));
  }
};

inline Pi0Monoid build_pi0_monoid(const GRing& gr, std::vector<int> Helems, int N,
                                  const Budget& budget = Budget{}) {
  std::sort(Helems.begin(), Helems.end());
  Pi0Monoid M;
  M.gr = gr;
  M.Helems = Helems;
  M.N = N;
  auto [H, elems] = gr.G.subgroup_as_group(Helems);
  for (int n = 0; n <= N; ++n) {
    if (n == 0) {
      SemilinearClasses L;
      L.H = H;
      L.elems = elems;
      L.rank = 0;
      L.cocycles = {trivial_cocycle(gr.R, H.n, 0)};
      L.class_of = {0};
      L.reps = {0};
      M.levels.push_back(std::move(L));
    } else {
      M.levels.push_back(enumerate_semilinear_structures(gr, Helems, n, budget));
    }
  }
  M.id_at.resize(N + 1);
  for (int n = 0; n <= N; ++n)
    for (int c = 0; c < M.levels[n].num_classes(); ++c) {
      M.id_at[n].push_back(M.num_ids());
      M.ids.push_back({n, c});
    }

  // indecomposables: not a block sum of two smaller nonzero classes
  for (int id = 0; id < M.num_ids(); ++id) {
    int r = M.rank_of(id);
    if (r == 0) continue;
    bool split = false;
    for (int a = 0; a < M.num_ids() && !split; ++a) {
      int ra = M.rank_of(a);
      if (ra < 1 || ra >= r) continue;
      for (int b = a; b < M.num_ids() && !split; ++b) {
        if (M.rank_of(b) != r - ra) continue;
        budget.charge(1, "splitting scan");
        if (M.add(a, b) == id) split = true;
      }
    }
    if (!split) M.indecomposables.push_back(id);
  }

  // unique-decomposition certificate: every class is the sum of exactly one
  // multiset of indecomposables
  const int k = static_cast<int>(M.indecomposables.size());
  std::vector<int> hits(M.num_ids(), 0);
  M.decomp.assign(M.num_ids(), {});
  std::vector<int> counts(k, 0);
  auto record = [&]() {
    Cocycle c = trivial_cocycle(gr.R, H.n, 0);
    for (int i = 0; i < k; ++i)
      for (int t = 0; t < counts[i]; ++t)
        c = cocycle_block_sum(gr.R, c, M.rep(M.indecomposables[i]));
    int rank = 0;
    for (int i = 0; i < k; ++i) rank += counts[i] * M.rank_of(M.indecomposables[i]);
    int id = M.classify_cocycle(rank, c);
    if (hits[id]++ == 0) M.decomp[id] = counts;
  };
  // odometer over multiplicity vectors with total rank <= N
  while (true) {
    budget.charge(1, "decomposition sweep");
    record();
    int i = k - 1;
    for (; i >= 0; --i) {
      ++counts[i];
      int rank = 0;
      for (int j = 0; j < k; ++j) rank += counts[j] * M.rank_of(M.indecomposables[j]);
      if (rank <= N) break;
      counts[i] = 0;
    }
    if (i < 0) break;
  }
  M.free = true;
  for (int id = 0; id < M.num_ids(); ++id)
    if (hits[id] != 1) M.free = false;
  if (!M.free) M.decomp.assign(M.num_ids(), {});
  return M;
}

// Restriction of a cocycle over H to a subgroup K <= H (parent indices).
inline Cocycle restrict_cocycle(const GRing& gr, const std::vector<int>& Helems,
                                const std::vector<int>& Kelems, const Cocycle& c) {
  auto [H, helems] = gr.G.subgroup_as_group(Helems);
  auto [K, kelems] = gr.G.subgroup_as_group(Kelems);
  if (static_cast<int>(c.f.size()) != H.n)
    throw Error("cocycle size does not match subgroup");
  Cocycle d;
  d.f.resize(K.n);
  for (int ki = 0; ki < K.n; ++ki) {
    int hi = -1;
    for (int t = 0; t < H.n; ++t)
      if (helems[t] == kelems[ki]) hi = t;
    if (hi < 0) throw Error("restriction target is not a subgroup of the source");
    d.f[ki] = c.f[hi];
  }
  return d;
}

// Induction of a cocycle from H up to an ambient subgroup K (H <= K), along
// a choice of left cosets of H in K. The block at (i, j) of the induced
// value at g is (B_{r_i^{-1} g r_j})^{r_i} when that element lies in H and
// zero otherwise, with r_i the first element of coset i.
inline Cocycle induced_cocycle(const GRing& gr, const std::vector<int>& Kelems,
                               const std::vector<int>& Helems, const Cocycle& B,
                               const std::vector<std::vector<int>>& cosets) {
  const FiniteGroup& G = gr.G;
  const FiniteRing& R = gr.R;
  auto [H, helems] = G.subgroup_as_group(Helems);
  auto [K, kelems] = G.subgroup_as_group(Kelems);
  if (static_cast<int>(B.f.size()) != H.n)
    throw Error("cocycle size does not match subgroup");
  const int n = B.f[H.e].rows;
  const int kk = static_cast<int>(cosets.size());
  std::vector<int> hindex(G.n, -1);
  for (int t = 0; t < H.n; ++t) hindex[helems[t]] = t;
  std::vector<int> reps(kk);
  for (int i = 0; i < kk; ++i) reps[i] = cosets[i][0];
  Cocycle A;
  A.f.resize(K.n);
  for (int gi = 0; gi < K.n; ++gi) {
    int g = kelems[gi];
    Mat M = mat_zero(R, kk * n, kk * n);
    for (int i = 0; i < kk; ++i)
      for (int j = 0; j < kk; ++j) {
        int h = G.mul(G.inv(reps[i]), G.mul(g, reps[j]));
        if (hindex[h] < 0) continue;
        Mat blk = mat_act(gr, reps[i], B.f[hindex[h]]);
        for (int r = 0; r < n; ++r)
          for (int c = 0; c < n; ++c) M.at(i * n + r, j * n + c) = blk.at(r, c);
      }
    A.f[gi] = M;
  }
  if (!is_cocycle(gr, K, kelems, A))
    throw Error("induced data fails the descent cocycle condition");
  return A;
}

inline Cocycle transfer_cocycle(const GRing& gr, const std::vector<int>& Kelems,
                                const std::vector<int>& Helems, const Cocycle& B) {
  auto cosets = [&] {
    auto [K, kelems] = gr.G.subgroup_as_group(Kelems);
    std::vector<int> hin;  // H as indices inside K
    for (int x : Helems)
      for (int i = 0; i < K.n; ++i)
        if (kelems[i] == x) hin.push_back(i);
    auto inner = K.left_cosets(hin);
    std::vector<std::vector<int>> out;
    for (auto& c : inner) {
      std::vector<int> parent;
      for (int i : c) parent.push_back(kelems[i]);
      std::sort(parent.begin(), parent.end());
      out.push_back(std::move(parent));
    }
    std::sort(out.begin(), out.end());
    return out;
  }();
  return induced_cocycle(gr, Kelems, Helems, B, cosets);
}

// Conjugacy classes of group homomorphisms H -> GL_n(R), enumerated without
// any cocycle machinery: a direct sweep over value tuples, classified under
// simultaneous conjugation. Used as an independent oracle when the ring
// action is trivial.
struct HomConjClasses {
  long long num_homs = 0;
  int num_classes = 0;
  std::vector<std::vector<Mat>> reps;  // tuple indexed by group element
};

inline HomConjClasses hom_conjugacy_classes(const FiniteRing& R, const FiniteGroup& H,
                                            int n, const Budget& budget = Budget{}) {
  auto gl = enumerate_gl(R, n, budget);
  const int m = static_cast<int>(gl.size());
  std::map<Mat, int> pos;
  for (int i = 0; i < m; ++i) pos[gl[i]] = i;

  std::vector<std::vector<int>> homs;  // images as GL indices, slot per element
  std::vector<int> tuple(H.n, pos.at(mat_eye(R, n)));
  std::vector<int> slots;  // non-identity elements
  for (int a = 0; a < H.n; ++a)
    if (a != H.e) slots.push_back(a);
  for (int a : slots) tuple[a] = 0;
  while (true) {
    budget.charge(static_cast<long long>(H.n) * H.n, "homomorphism sweep");
    bool is_hom = true;
    for (int a = 0; a < H.n && is_hom; ++a)
      for (int b = 0; b < H.n && is_hom; ++b) {
        Mat prod = mat_mul(R, gl[tuple[a]], gl[tuple[b]]);
        if (prod != gl[tuple[H.mul(a, b)]]) is_hom = false;
      }
    if (is_hom) homs.push_back(tuple);
    int k = static_cast<int>(slots.size()) - 1;
    for (; k >= 0; --k) {
      if (++tuple[slots[k]] < m) break;
      tuple[slots[k]] = 0;
    }
    if (k < 0) break;
  }

  HomConjClasses out;
  out.num_homs = static_cast<long long>(homs.size());
  std::sort(homs.begin(), homs.end());
  std::vector<char> assigned(homs.size(), 0);
  auto find_hom = [&](const std::vector<int>& t) {
    auto it = std::lower_bound(homs.begin(), homs.end(), t);
    if (it == homs.end() || *it != t) throw Error("conjugation left the homomorphism set");
    return static_cast<int>(it - homs.begin());
  };
  for (size_t i = 0; i < homs.size(); ++i) {
    if (assigned[i]) continue;
    ++out.num_classes;
    std::vector<Mat> rep;
    for (int a = 0; a < H.n; ++a) rep.push_back(gl[homs[i][a]]);
    out.reps.push_back(std::move(rep));
    for (const Mat& B : gl) {
      budget.charge(H.n, "conjugation orbit sweep");
      auto Binv = mat_inv(R, B);
      std::vector<int> t(H.n);
      for (int a = 0; a < H.n; ++a)
        t[a] = pos.at(mat_mul(R, B, mat_mul(R, gl[homs[i][a]], *Binv)));
      assigned[find_hom(t)] = 1;
    }
  }
  return out;
}

}  // namespace hofix
