#pragma once
// Group completion of the truncated tower at the pi0 level, the independent
// formal-difference oracle it must agree with, and small materialized models:
// the tower itself as a G-category, the completion category built from
// translation-orbit canonical representatives, and the twisted free-module
// category with its translation action.

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hofix/gcategory.hpp"
#include "hofix/smon.hpp"

namespace hofix {

// Precondition of the completion construction: translation by a summand is
// injective on automorphisms. Verified literally on the matrix tower.
inline bool check_faithful_translations(const FiniteRing& R, int max_rank,
                                        const Budget& budget = Budget{}) {
  for (int s = 0; s <= max_rank; ++s) {
    auto gl = enumerate_gl(R, s, budget);
    for (int t = 0; s + t <= max_rank; ++t) {
      std::vector<Mat> shifted;
      shifted.reserve(gl.size());
      Mat eye = mat_eye(R, t);
      for (const Mat& X : gl) {
        budget.charge(1, "translation injectivity scan");
        shifted.push_back(block_sum(R, X, eye));
      }
      std::sort(shifted.begin(), shifted.end());
      if (std::adjacent_find(shifted.begin(), shifted.end()) != shifted.end())
        return false;
    }
  }
  return true;
}

// pi0 of the completion: pairs of classes modulo simultaneous translation.
struct SInvSPi0 {
  int num_ids = 0;  // classes in the underlying monoid
  std::vector<int> comp_of;  // pair (a, b) at index a*num_ids+b -> component
  int num_components = 0;
  bool oracle_match = false;  // equals the formal-difference partition
};

inline SInvSPi0 s_inverse_s_pi0(const Pi0Monoid& M) {
  SInvSPi0 out;
  const int C = M.num_ids();
  out.num_ids = C;
  detail::UnionFind uf(C * C);
  for (int a = 0; a < C; ++a)
    for (int b = 0; b < C; ++b)
      for (int c = 0; c < C; ++c) {
        if (M.rank_of(c) < 1) continue;
        int ac = M.add(a, c), bc = M.add(b, c);
        if (ac >= 0 && bc >= 0) uf.unite(a * C + b, ac * C + bc);
      }
  out.comp_of = uf.classes();
  out.num_components = 1 + *std::max_element(out.comp_of.begin(), out.comp_of.end());

  if (M.free) {
    // formal differences of decomposition vectors, computed independently
    std::map<std::vector<long long>, int> key_of;
    std::vector<int> oracle(C * C);
    for (int a = 0; a < C; ++a)
      for (int b = 0; b < C; ++b) {
        std::vector<long long> d;
        for (size_t i = 0; i < M.indecomposables.size(); ++i)
          d.push_back(static_cast<long long>(M.decomp[a][i]) - M.decomp[b][i]);
        auto [it, fresh] = key_of.insert({d, static_cast<int>(key_of.size())});
        oracle[a * C + b] = it->second;
        (void)fresh;
      }
    out.oracle_match = true;
    for (int x = 0; x < C * C && out.oracle_match; ++x)
      for (int y = x + 1; y < C * C; ++y)
        if ((out.comp_of[x] == out.comp_of[y]) != (oracle[x] == oracle[y])) {
          out.oracle_match = false;
          break;
        }
  }
  return out;
}

// The tower of free modules as a G-category: objects are ranks 0..N, the
// morphisms of rank n are GL_n, the group acts on matrix entries. The
// matrix behind each morphism index stays available for comparisons.
struct TowerCat {
  GCategory C;
  std::vector<std::vector<Mat>> gl;       // per rank, in morphism order
  std::vector<int> offset;                // rank -> first morphism index
  std::vector<std::map<Mat, int>> pos;    // per rank, matrix -> morphism

  const Mat& mat_of(int m) const {
    int n = static_cast<int>(offset.size()) - 1;
    while (offset[n] > m) --n;
    return gl[n][m - offset[n]];
  }
};

inline TowerCat materialize_gl_tower(const GRing& gr, int N,
                                     const Budget& budget = Budget{}) {
  TowerCat T;
  GCategory& C = T.C;
  C.G = gr.G;
  C.cat.nobj = N + 1;
  auto& gl = T.gl;
  auto& offset = T.offset;
  T.pos.resize(N + 1);
  auto& pos = T.pos;
  for (int n = 0; n <= N; ++n) {
    gl.push_back(enumerate_gl(gr.R, n, budget));
    offset.push_back(C.cat.nmor());
    for (const Mat& X : gl[n]) {
      pos[n][X] = C.cat.nmor();
      C.cat.src.push_back(n);
      C.cat.tgt.push_back(n);
      C.cat.mor_names.push_back(mat_name(gr.R, X));
    }
    C.cat.obj_names.push_back("rank" + std::to_string(n));
    C.cat.idm.push_back(pos[n].at(mat_eye(gr.R, n)));
  }
  for (int n = 0; n <= N; ++n)
    for (size_t i = 0; i < gl[n].size(); ++i)
      for (size_t j = 0; j < gl[n].size(); ++j) {
        budget.charge(1, "tower composition table");
        C.cat.comp[{offset[n] + static_cast<int>(i), offset[n] + static_cast<int>(j)}] =
            pos[n].at(mat_mul(gr.R, gl[n][i], gl[n][j]));
      }
  C.obj_act.assign(gr.G.n, std::vector<int>(C.cat.nobj));
  C.mor_act.assign(gr.G.n, std::vector<int>(C.cat.nmor()));
  for (int g = 0; g < gr.G.n; ++g) {
    for (int n = 0; n <= N; ++n) {
      C.obj_act[g][n] = n;
      for (size_t i = 0; i < gl[n].size(); ++i)
        C.mor_act[g][offset[n] + static_cast<int>(i)] =
            pos[n].at(mat_act(gr, g, gl[n][i]));
    }
  }
  return T;
}

inline GCategory gl_tower_gcategory(const GRing& gr, int N,
                                    const Budget& budget = Budget{}) {
  return materialize_gl_tower(gr, N, budget).C;
}

// The twisted free-module category: objects (n, a) for a in G, morphisms
// between equal ranks are invertible matrices regardless of the twists,
// composition is matrix multiplication, and g sends (n, a) to (n, ga) and
// acts on entries. Its homotopy fixed points are exactly the descent data.
struct TwistedModel {
  GCategory C;
  std::vector<std::pair<int, int>> objects;  // (rank, twist)
  std::vector<Mat> mats;                     // morphism index -> matrix
  std::vector<std::array<int, 2>> mor_obj;   // morphism index -> (src, tgt)
  std::map<std::tuple<int, int, Mat>, int> mor_pos;  // (src, tgt, matrix)

  int obj_index(int n, int a) const { return n * C.G.n + a; }
};

inline TwistedModel twisted_model_gcategory(const GRing& gr, int N,
                                            const Budget& budget = Budget{}) {
  TwistedModel T;
  const FiniteGroup& G = gr.G;
  T.C.G = G;
  T.C.cat.nobj = (N + 1) * G.n;
  for (int n = 0; n <= N; ++n)
    for (int a = 0; a < G.n; ++a) {
      T.objects.push_back({n, a});
      T.C.cat.obj_names.push_back("(" + std::to_string(n) + "," + G.name(a) + ")");
    }
  std::vector<std::vector<Mat>> gl;
  for (int n = 0; n <= N; ++n) gl.push_back(enumerate_gl(gr.R, n, budget));
  for (int n = 0; n <= N; ++n)
    for (int a = 0; a < G.n; ++a)
      for (int b = 0; b < G.n; ++b)
        for (const Mat& X : gl[n]) {
          budget.charge(1, "twisted model morphisms");
          int src = T.obj_index(n, a), tgt = T.obj_index(n, b);
          T.mor_pos[{src, tgt, X}] = T.C.cat.nmor();
          T.mor_obj.push_back({src, tgt});
          T.mats.push_back(X);
          T.C.cat.src.push_back(src);
          T.C.cat.tgt.push_back(tgt);
          T.C.cat.mor_names.push_back(mat_name(gr.R, X));
        }
  for (int n = 0; n <= N; ++n)
    for (int a = 0; a < G.n; ++a)
      T.C.cat.idm.push_back(
          T.mor_pos.at({T.obj_index(n, a), T.obj_index(n, a), mat_eye(gr.R, n)}));
  for (int m2 = 0; m2 < T.C.cat.nmor(); ++m2)
    for (int m1 = 0; m1 < T.C.cat.nmor(); ++m1) {
      if (T.mor_obj[m1][1] != T.mor_obj[m2][0]) continue;
      budget.charge(1, "twisted model composition table");
      T.C.cat.comp[{m2, m1}] = T.mor_pos.at(
          {T.mor_obj[m1][0], T.mor_obj[m2][1], mat_mul(gr.R, T.mats[m2], T.mats[m1])});
    }
  T.C.obj_act.assign(G.n, std::vector<int>(T.C.cat.nobj));
  T.C.mor_act.assign(G.n, std::vector<int>(T.C.cat.nmor()));
  for (int g = 0; g < G.n; ++g) {
    for (int n = 0; n <= N; ++n)
      for (int a = 0; a < G.n; ++a)
        T.C.obj_act[g][T.obj_index(n, a)] = T.obj_index(n, G.mul(g, a));
    for (int m = 0; m < T.C.cat.nmor(); ++m) {
      auto [n1, a1] = T.objects[T.mor_obj[m][0]];
      auto [n2, a2] = T.objects[T.mor_obj[m][1]];
      T.C.mor_act[g][m] = T.mor_pos.at({T.obj_index(n1, G.mul(g, a1)),
                                        T.obj_index(n2, G.mul(g, a2)),
                                        mat_act(gr, g, T.mats[m])});
    }
  }
  return T;
}

// The materialized completion category on a truncated tower: objects are
// pairs of ranks, morphisms are translation triples (r, f, g) reduced to the
// lexicographically least representative of their reindexing orbit.
struct SInvSCat {
  GCategory C;
  std::vector<std::pair<int, int>> objects;  // (m, n)
  struct MorRep {
    int r = 0;
    Mat f, g;
  };
  std::vector<MorRep> reps;  // aligned with morphism indices
};

inline SInvSCat materialize_s_inverse_s(const GRing& gr, int N,
                                        const Budget& budget = Budget{}) {
  const FiniteRing& R = gr.R;
  SInvSCat S;
  S.C.G = gr.G;
  std::vector<std::vector<Mat>> gl;
  for (int n = 0; n <= N; ++n) gl.push_back(enumerate_gl(R, n, budget));
  for (int m = 0; m <= N; ++m)
    for (int n = 0; n <= N; ++n) S.objects.push_back({m, n});
  S.C.cat.nobj = static_cast<int>(S.objects.size());
  for (auto [m, n] : S.objects)
    S.C.cat.obj_names.push_back("(" + std::to_string(m) + "," + std::to_string(n) + ")");

  auto canonical = [&](int r, int m, int n, Mat f, Mat g) {
    std::pair<Mat, Mat> best = {f, g};
    for (const Mat& al : gl[r]) {
      budget.charge(1, "orbit reduction");
      std::pair<Mat, Mat> cand = {mat_mul(R, f, block_sum(R, al, mat_eye(R, m))),
                                  mat_mul(R, g, block_sum(R, al, mat_eye(R, n)))};
      if (cand < best) best = cand;
    }
    return best;
  };

  std::map<std::tuple<int, int, Mat, Mat>, int> pos;  // (src, tgt, f, g)
  for (int si = 0; si < S.C.cat.nobj; ++si) {
    auto [m, n] = S.objects[si];
    for (int ti = 0; ti < S.C.cat.nobj; ++ti) {
      auto [p, q] = S.objects[ti];
      int r = p - m;
      if (r < 0 || q - n != r) continue;
      std::vector<std::pair<Mat, Mat>> found;
      for (const Mat& f : gl[p])
        for (const Mat& g : gl[q]) {
          auto c = canonical(r, m, n, f, g);
          if (c.first == f && c.second == g) found.push_back(c);
        }
      for (auto& [f, g] : found) {
        pos[{si, ti, f, g}] = S.C.cat.nmor();
        S.C.cat.src.push_back(si);
        S.C.cat.tgt.push_back(ti);
        S.C.cat.mor_names.push_back("[" + std::to_string(r) + "]");
        S.reps.push_back({r, f, g});
      }
    }
  }
  for (int si = 0; si < S.C.cat.nobj; ++si) {
    auto [m, n] = S.objects[si];
    S.C.cat.idm.push_back(pos.at({si, si, mat_eye(R, m), mat_eye(R, n)}));
  }
  auto classify = [&](int si, int ti, int r, const Mat& f, const Mat& g) {
    auto [m, n] = S.objects[si];
    auto c = canonical(r, m, n, f, g);
    return pos.at({si, ti, c.first, c.second});
  };
  for (int m2 = 0; m2 < S.C.cat.nmor(); ++m2)
    for (int m1 = 0; m1 < S.C.cat.nmor(); ++m1) {
      if (S.C.cat.tgt[m1] != S.C.cat.src[m2]) continue;
      budget.charge(1, "completion composition table");
      int si = S.C.cat.src[m1], ti = S.C.cat.tgt[m2];
      const SInvSCat::MorRep& A = S.reps[m1];
      const SInvSCat::MorRep& B = S.reps[m2];
      Mat f = mat_mul(R, B.f, block_sum(R, mat_eye(R, B.r), A.f));
      Mat g = mat_mul(R, B.g, block_sum(R, mat_eye(R, B.r), A.g));
      S.C.cat.comp[{m2, m1}] = classify(si, ti, B.r + A.r, f, g);
    }
  S.C.obj_act.assign(gr.G.n, std::vector<int>(S.C.cat.nobj));
  S.C.mor_act.assign(gr.G.n, std::vector<int>(S.C.cat.nmor()));
  for (int g = 0; g < gr.G.n; ++g) {
    for (int i = 0; i < S.C.cat.nobj; ++i) S.C.obj_act[g][i] = i;
    for (int m = 0; m < S.C.cat.nmor(); ++m)
      S.C.mor_act[g][m] = classify(S.C.cat.src[m], S.C.cat.tgt[m], S.reps[m].r,
                                   mat_act(gr, g, S.reps[m].f),
                                   mat_act(gr, g, S.reps[m].g));
  }
  return S;
}

}  // namespace hofix
