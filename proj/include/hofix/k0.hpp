#pragma once
// K0 of the truncated semilinear tower per subgroup level, with restriction
// and transfer maps on indecomposable bases and the double-coset identity
// relating them. The group Z^k is asserted only when the pi0 monoid is
// certified free on its indecomposables at this truncation; otherwise the
// raw table is reported with no identification.

#include <string>
#include <vector>

#include "hofix/smon.hpp"

namespace hofix {

using IntMat = std::vector<std::vector<long long>>;

inline IntMat int_mat_mul(const IntMat& A, const IntMat& B) {
  if (A.empty() || B.empty()) return IntMat(A.size(), std::vector<long long>(B.empty() ? 0 : B[0].size(), 0));
  IntMat C(A.size(), std::vector<long long>(B[0].size(), 0));
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t k = 0; k < B.size(); ++k)
      for (size_t j = 0; j < B[0].size(); ++j) C[i][j] += A[i][k] * B[k][j];
  return C;
}

struct K0Row {
  std::vector<int> Helems;
  std::vector<int> classes_per_rank;  // index = rank, 0..N
  std::vector<int> indec_ranks;       // rank of each indecomposable generator
  bool free_monoid = false;
  bool stable = false;  // no indecomposable sits at the truncation boundary
  std::string k0;
  std::string annotation;
};

inline K0Row k0_row(const Pi0Monoid& M) {
  K0Row row;
  row.Helems = M.Helems;
  for (int n = 0; n <= M.N; ++n)
    row.classes_per_rank.push_back(M.levels[n].num_classes());
  for (int id : M.indecomposables) row.indec_ranks.push_back(M.rank_of(id));
  row.free_monoid = M.free;
  row.stable = M.free;
  for (int r : row.indec_ranks)
    if (r == M.N) row.stable = false;
  if (M.free)
    row.k0 = "Z^" + std::to_string(M.indecomposables.size()) +
             (row.stable ? "" : " (generators may be incomplete at this truncation)");
  else
    row.k0 = "unidentified at this truncation";
  if (!check_order_invertible(M.gr, M.Helems))
    row.annotation =
        "subgroup order is not invertible in the ring; the table is reported "
        "as computed, with no further identification";
  return row;
}

// Decompose a class into the indecomposable basis as a column vector.
inline std::vector<long long> decomp_column(const Pi0Monoid& M, int id) {
  if (!M.free) throw Error("monoid is not certified free at this truncation");
  std::vector<long long> col;
  for (int c : M.decomp[id]) col.push_back(c);
  return col;
}

// res: K0 over Helems -> K0 over Kelems (K <= H), on indecomposable bases.
inline IntMat restriction_matrix(const Pi0Monoid& MH, const Pi0Monoid& MK) {
  IntMat out(MK.indecomposables.size(),
             std::vector<long long>(MH.indecomposables.size(), 0));
  for (size_t j = 0; j < MH.indecomposables.size(); ++j) {
    int id = MH.indecomposables[j];
    Cocycle c = restrict_cocycle(MH.gr, MH.Helems, MK.Helems, MH.rep(id));
    auto col = decomp_column(MK, MK.classify_cocycle(MH.rank_of(id), c));
    for (size_t i = 0; i < col.size(); ++i) out[i][j] = col[i];
  }
  return out;
}

// tr: K0 over Kelems -> K0 over Helems (K <= H), by induction of descent data.
inline IntMat transfer_matrix(const Pi0Monoid& MK, const Pi0Monoid& MH) {
  int index = static_cast<int>(MH.Helems.size() / MK.Helems.size());
  IntMat out(MH.indecomposables.size(),
             std::vector<long long>(MK.indecomposables.size(), 0));
  for (size_t j = 0; j < MK.indecomposables.size(); ++j) {
    int id = MK.indecomposables[j];
    int rank = MK.rank_of(id) * index;
    if (rank > MH.N)
      throw Error("transfer of a generator exceeds the truncation; raise N");
    Cocycle c = transfer_cocycle(MK.gr, MH.Helems, MK.Helems, MK.rep(id));
    auto col = decomp_column(MH, MH.classify_cocycle(rank, c));
    for (size_t i = 0; i < col.size(); ++i) out[i][j] = col[i];
  }
  return out;
}

// The class map induced by conjugation with g (an endomorphism of the level
// over a normal subgroup; for H normal in G, g H g^{-1} = H).
inline IntMat conjugation_matrix(const Pi0Monoid& M, int g) {
  IntMat out(M.indecomposables.size(),
             std::vector<long long>(M.indecomposables.size(), 0));
  for (size_t j = 0; j < M.indecomposables.size(); ++j) {
    int id = M.indecomposables[j];
    auto [kelems, c] = conjugate_cocycle(M.gr, M.Helems, M.rep(id), g);
    if (kelems != M.Helems)
      throw Error("conjugation moved the subgroup; level is not preserved");
    auto col = decomp_column(M, M.classify_cocycle(M.rank_of(id), c));
    for (size_t i = 0; i < col.size(); ++i) out[i][j] = col[i];
  }
  return out;
}

struct MackeyK0Report {
  int N = 0;
  K0Row top;     // full group level
  K0Row bottom;  // trivial subgroup level
  IntMat res, tr, res_tr;
  bool transfer_is_descent_datum = false;
  bool coset_order_independent = false;
  bool mackey_ok = false;      // res.tr matches the double-coset prediction
  bool oracle_checked = false;  // trivial action: independent hom enumeration
  bool oracle_ok = false;
};

inline bool gring_action_trivial(const GRing& gr) {
  for (int g = 0; g < gr.G.n; ++g)
    for (int r = 0; r < gr.R.n; ++r)
      if (gr.act(g, r) != r) return false;
  return true;
}

inline MackeyK0Report mackey_k0_report(const GRing& gr, int N,
                                       const Budget& budget = Budget{}) {
  MackeyK0Report rep;
  rep.N = N;
  std::vector<int> allg(gr.G.n);
  for (int i = 0; i < gr.G.n; ++i) allg[i] = i;
  std::vector<int> trivial = {gr.G.e};
  Pi0Monoid MG = build_pi0_monoid(gr, allg, N, budget);
  Pi0Monoid Me = build_pi0_monoid(gr, trivial, N, budget);
  rep.top = k0_row(MG);
  rep.bottom = k0_row(Me);
  rep.res = restriction_matrix(MG, Me);
  rep.tr = transfer_matrix(Me, MG);
  rep.res_tr = int_mat_mul(rep.res, rep.tr);

  // the transferred generators are honest descent data, and their class
  // does not depend on how the cosets were ordered
  rep.transfer_is_descent_datum = true;
  rep.coset_order_independent = true;
  auto cosets = gr.G.left_cosets(trivial);
  for (size_t j = 0; j < Me.indecomposables.size(); ++j) {
    int id = Me.indecomposables[j];
    int rank = Me.rank_of(id) * static_cast<int>(cosets.size());
    if (rank > N) continue;
    Cocycle a = induced_cocycle(gr, allg, trivial, Me.rep(id), cosets);
    auto [G2, allg2] = gr.G.subgroup_as_group(allg);
    if (!is_cocycle(gr, G2, allg2, a)) rep.transfer_is_descent_datum = false;
    auto reversed = cosets;
    std::reverse(reversed.begin(), reversed.end());
    Cocycle b = induced_cocycle(gr, allg, trivial, Me.rep(id), reversed);
    if (MG.classify_cocycle(rank, a) != MG.classify_cocycle(rank, b))
      rep.coset_order_independent = false;
  }

  // double-coset prediction for res.tr on the bottom level: a sum of
  // conjugation maps, one per double coset of the trivial subgroup
  IntMat prediction(Me.indecomposables.size(),
                    std::vector<long long>(Me.indecomposables.size(), 0));
  for (const auto& dc : gr.G.double_cosets(trivial, trivial)) {
    IntMat cg = conjugation_matrix(Me, dc.front());
    for (size_t i = 0; i < prediction.size(); ++i)
      for (size_t j = 0; j < prediction[i].size(); ++j)
        prediction[i][j] += cg[i][j];
  }
  rep.mackey_ok = (rep.res_tr == prediction);

  if (gring_action_trivial(gr)) {
    rep.oracle_checked = true;
    rep.oracle_ok = true;
    auto [G2, allg2] = gr.G.subgroup_as_group(allg);
    for (int n = 1; n <= N; ++n) {
      auto oracle = hom_conjugacy_classes(gr.R, G2, n, budget);
      if (oracle.num_classes != rep.top.classes_per_rank[n]) rep.oracle_ok = false;
    }
  }
  return rep;
}

}  // namespace hofix
