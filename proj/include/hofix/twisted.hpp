#pragma once
// The twisted group ring R_G[G] with (rg)(sh) = r s^g (gh), and the map
// theta sending rg to the endomorphism s -> r s^g of R over its fixed ring.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "hofix/common.hpp"
#include "hofix/gring.hpp"
#include "hofix/matrix.hpp"

namespace hofix {

// A subset closed under the ring operations, repackaged as a standalone ring.
// Returns the ring together with the index embedding into the parent.
inline std::pair<FiniteRing, std::vector<int>> subring_as_ring(
    const FiniteRing& R, std::vector<int> subset) {
  std::sort(subset.begin(), subset.end());
  std::vector<int> pos(R.n, -1);
  for (size_t i = 0; i < subset.size(); ++i) pos[subset[i]] = static_cast<int>(i);
  if (pos[R.zero] < 0 || pos[R.one] < 0)
    throw ValidationError("subring must contain 0 and 1");
  FiniteRing S;
  S.n = static_cast<int>(subset.size());
  S.add_.assign(static_cast<size_t>(S.n) * S.n, 0);
  S.mul_.assign(static_cast<size_t>(S.n) * S.n, 0);
  for (int i = 0; i < S.n; ++i)
    for (int j = 0; j < S.n; ++j) {
      int a = pos[R.add(subset[i], subset[j])];
      int m = pos[R.mul(subset[i], subset[j])];
      if (a < 0 || m < 0) throw ValidationError("subset is not closed under ring operations");
      S.add_[static_cast<size_t>(i) * S.n + j] = a;
      S.mul_[static_cast<size_t>(i) * S.n + j] = m;
    }
  S.zero = pos[R.zero];
  S.one = pos[R.one];
  S.names.resize(S.n);
  for (int i = 0; i < S.n; ++i) S.names[i] = R.name(subset[i]);
  S.finish();
  S.validate();
  return {std::move(S), std::move(subset)};
}

struct TwistedGroupRing {
  GRing base;
  FiniteRing ring;  // |R|^|G| elements; index encodes the coefficient tuple

  std::vector<int> coeffs(int idx) const {
    std::vector<int> c(base.G.n);
    for (int g = 0; g < base.G.n; ++g) {
      c[g] = idx % base.R.n;
      idx /= base.R.n;
    }
    return c;
  }
  int index(const std::vector<int>& c) const {
    int idx = 0;
    for (int g = base.G.n - 1; g >= 0; --g) idx = idx * base.R.n + c[g];
    return idx;
  }
  int basis_elem(int r, int g) const {
    std::vector<int> c(base.G.n, base.R.zero);
    c[g] = r;
    return index(c);
  }
};

inline TwistedGroupRing twisted_group_ring(const GRing& gr) {
  long long size = 1;
  for (int g = 0; g < gr.G.n; ++g) {
    size *= gr.R.n;
    if (size > 4096) throw Error("twisted group ring too large to materialize");
  }
  TwistedGroupRing T;
  T.base = gr;
  const FiniteRing& R = gr.R;
  const FiniteGroup& G = gr.G;
  int n = static_cast<int>(size);
  FiniteRing& tr = T.ring;
  tr.n = n;
  tr.add_.assign(static_cast<size_t>(n) * n, 0);
  tr.mul_.assign(static_cast<size_t>(n) * n, 0);
  std::vector<std::vector<int>> co(n);
  for (int i = 0; i < n; ++i) co[i] = T.coeffs(i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> sum(G.n), prod(G.n, R.zero);
      for (int g = 0; g < G.n; ++g) sum[g] = R.add(co[i][g], co[j][g]);
      for (int g = 0; g < G.n; ++g) {
        if (co[i][g] == R.zero) continue;
        for (int h = 0; h < G.n; ++h) {
          if (co[j][h] == R.zero) continue;
          int k = G.mul(g, h);
          prod[k] = R.add(prod[k], R.mul(co[i][g], gr.act(g, co[j][h])));
        }
      }
      tr.add_[static_cast<size_t>(i) * n + j] = T.index(sum);
      tr.mul_[static_cast<size_t>(i) * n + j] = T.index(prod);
    }
  tr.zero = T.basis_elem(R.zero, G.e);
  tr.one = T.basis_elem(R.one, G.e);
  tr.names.resize(n);
  for (int i = 0; i < n; ++i) {
    std::string s;
    for (int g = 0; g < G.n; ++g) {
      if (co[i][g] == R.zero) continue;
      if (!s.empty()) s += "+";
      s += "(" + R.name(co[i][g]) + ")" + G.name(g);
    }
    tr.names[i] = s.empty() ? "0" : s;
  }
  tr.finish();
  if (n <= 1024) tr.validate();
  return T;
}

// An R^G-basis of R, with coordinate tables. Requires R to be free over the
// fixed ring, which holds for every supported instance; violations throw.
struct FixedModuleBasis {
  FiniteRing F;                          // the fixed ring, standalone
  std::vector<int> embed;                // F index -> R index
  std::vector<int> basis;                // R elements forming an F-basis
  std::vector<std::vector<int>> coords;  // R index -> F-coordinate tuple
};

inline FixedModuleBasis fixed_module_basis(const GRing& gr) {
  std::vector<int> all(gr.G.n);
  for (int i = 0; i < gr.G.n; ++i) all[i] = i;
  auto [F, embed] = subring_as_ring(gr.R, gr.fixed_elements(all));
  FixedModuleBasis fb;
  fb.F = std::move(F);
  fb.embed = std::move(embed);
  const FiniteRing& R = gr.R;
  std::set<int> span = {R.zero};
  for (int r = 0; r < R.n && static_cast<int>(span.size()) < R.n; ++r) {
    if (span.count(r)) continue;
    std::set<int> bigger;
    for (int s : span)
      for (int fi = 0; fi < fb.F.n; ++fi)
        bigger.insert(R.add(s, R.mul(fb.embed[fi], r)));
    if (bigger.size() != span.size() * static_cast<size_t>(fb.F.n))
      throw ValidationError("ring is not free over its fixed subring");
    fb.basis.push_back(r);
    span = std::move(bigger);
  }
  int d = static_cast<int>(fb.basis.size());
  std::vector<char> seen(R.n, 0);
  fb.coords.assign(R.n, {});
  std::vector<int> tuple(d, 0);
  bool done = false;
  while (!done) {
    int v = R.zero;
    for (int i = 0; i < d; ++i) v = R.add(v, R.mul(fb.embed[tuple[i]], fb.basis[i]));
    if (seen[v]) throw ValidationError("basis coordinates are not unique");
    seen[v] = 1;
    fb.coords[v] = tuple;
    done = true;
    for (int k = d - 1; k >= 0; --k) {
      if (++tuple[k] < fb.F.n) {
        done = false;
        break;
      }
      tuple[k] = 0;
    }
  }
  for (int r = 0; r < R.n; ++r)
    if (!seen[r]) throw ValidationError("basis does not span the ring");
  return fb;
}

struct ThetaReport {
  bool additive = false, multiplicative = false, unital = false;
  bool fixed_linear = false;  // every image commutes with fixed-ring scalars
  bool injective = false, surjective = false;
  int module_rank = 0;        // d = rank of R over R^G
  long long end_count = 0;    // |End_{R^G}(R)| = |R^G|^(d*d)
  std::vector<std::vector<int>> endo;  // twisted element -> value table on R

  bool bijective() const { return injective && surjective; }
  bool ring_hom() const { return additive && multiplicative && unital; }
};

inline ThetaReport theta_hom(const TwistedGroupRing& T) {
  const GRing& gr = T.base;
  const FiniteRing& R = gr.R;
  const FiniteGroup& G = gr.G;
  int n = T.ring.n;
  ThetaReport rep;
  rep.endo.assign(n, std::vector<int>(R.n, R.zero));
  for (int t = 0; t < n; ++t) {
    auto c = T.coeffs(t);
    for (int s = 0; s < R.n; ++s) {
      int v = R.zero;
      for (int g = 0; g < G.n; ++g)
        if (c[g] != R.zero) v = R.add(v, R.mul(c[g], gr.act(g, s)));
      rep.endo[t][s] = v;
    }
  }
  rep.unital = true;
  for (int s = 0; s < R.n; ++s)
    if (rep.endo[T.ring.one][s] != s) rep.unital = false;
  rep.additive = true;
  rep.multiplicative = true;
  for (int t = 0; t < n && (rep.additive || rep.multiplicative); ++t)
    for (int u = 0; u < n; ++u) {
      const auto& ft = rep.endo[t];
      const auto& fu = rep.endo[u];
      const auto& fsum = rep.endo[T.ring.add(t, u)];
      const auto& fprod = rep.endo[T.ring.mul(t, u)];
      for (int s = 0; s < R.n; ++s) {
        if (fsum[s] != R.add(ft[s], fu[s])) rep.additive = false;
        if (fprod[s] != ft[fu[s]]) rep.multiplicative = false;
      }
      if (!rep.additive && !rep.multiplicative) break;
    }
  auto fb = fixed_module_basis(gr);
  rep.module_rank = static_cast<int>(fb.basis.size());
  rep.end_count = 1;
  for (int k = 0; k < rep.module_rank * rep.module_rank; ++k)
    rep.end_count *= fb.F.n;
  rep.fixed_linear = true;
  for (int t = 0; t < n && rep.fixed_linear; ++t)
    for (int fi = 0; fi < fb.F.n && rep.fixed_linear; ++fi)
      for (int s = 0; s < R.n; ++s) {
        int f = fb.embed[fi];
        if (rep.endo[t][R.mul(f, s)] != R.mul(f, rep.endo[t][s])) {
          rep.fixed_linear = false;
          break;
        }
      }
  std::set<std::vector<int>> images(rep.endo.begin(), rep.endo.end());
  rep.injective = static_cast<int>(images.size()) == n;
  rep.surjective =
      rep.fixed_linear && static_cast<long long>(images.size()) == rep.end_count;
  return rep;
}

// Matrix of an R^G-linear endomorphism relative to the computed basis:
// column j holds the coordinates of the image of basis element j.
inline Mat endo_matrix(const FixedModuleBasis& fb,
                       const std::vector<int>& endo_table) {
  int d = static_cast<int>(fb.basis.size());
  Mat M(d, d, fb.F.zero);
  for (int j = 0; j < d; ++j) {
    const auto& col = fb.coords[endo_table[fb.basis[j]]];
    for (int i = 0; i < d; ++i) M.at(i, j) = col[i];
  }
  return M;
}

}  // namespace hofix
