#pragma once
// A finite ring with a finite group acting by ring automorphisms.
//
// Convention: act(g) . act(h) = act(gh), i.e. r^{gh} = (r^h)^g. The validator
// enforces this orientation exhaustively; everything downstream (twisted group
// rings, semilinear modules, descent) relies on it.

#include <optional>
#include <string>
#include <vector>

#include "hofix/group.hpp"
#include "hofix/ring.hpp"

namespace hofix {

struct GRing {
  FiniteRing R;
  FiniteGroup G;
  std::vector<std::vector<int>> act_;  // act_[g][r]

  int act(int g, int r) const { return act_[g][r]; }

  void validate() const {
    if (static_cast<int>(act_.size()) != G.n)
      throw ValidationError("action table has wrong group size");
    for (int g = 0; g < G.n; ++g) {
      const auto& a = act_[g];
      if (static_cast<int>(a.size()) != R.n)
        throw ValidationError("action table has wrong ring size");
      if (a[R.one] != R.one)
        throw ValidationError("action of " + G.name(g) + " moves 1");
      for (int r = 0; r < R.n; ++r)
        for (int s = 0; s < R.n; ++s) {
          if (a[R.add(r, s)] != R.add(a[r], a[s]))
            throw ValidationError("action of " + G.name(g) +
                                  " is not additive at (" + R.name(r) + "," +
                                  R.name(s) + ")");
          if (a[R.mul(r, s)] != R.mul(a[r], a[s]))
            throw ValidationError("action of " + G.name(g) +
                                  " is not multiplicative at (" + R.name(r) +
                                  "," + R.name(s) + ")");
        }
      // bijectivity follows from additivity + the composition law below, but
      // check directly so a bad table fails with a local witness
      std::vector<char> hit(R.n, 0);
      for (int r = 0; r < R.n; ++r) hit[a[r]] = 1;
      for (int r = 0; r < R.n; ++r)
        if (!hit[r])
          throw ValidationError("action of " + G.name(g) + " is not onto");
    }
    for (int r = 0; r < R.n; ++r)
      if (act_[G.e][r] != r)
        throw ValidationError("identity element acts nontrivially");
    for (int g = 0; g < G.n; ++g)
      for (int h = 0; h < G.n; ++h)
        for (int r = 0; r < R.n; ++r)
          if (act_[G.mul(g, h)][r] != act_[g][act_[h][r]])
            throw ValidationError(
                "composition convention r^{gh} = (r^h)^g fails at g=" +
                G.name(g) + " h=" + G.name(h) + " r=" + R.name(r));
  }

  // Elements fixed by every h in the (sorted) subgroup H.
  std::vector<int> fixed_elements(const std::vector<int>& H) const {
    std::vector<int> out;
    for (int r = 0; r < R.n; ++r) {
      bool ok = true;
      for (int h : H)
        if (act_[h][r] != r) {
          ok = false;
          break;
        }
      if (ok) out.push_back(r);
    }
    return out;
  }
};

inline GRing make_trivial_gring(FiniteRing R, FiniteGroup G) {
  GRing gr;
  gr.R = std::move(R);
  gr.G = std::move(G);
  gr.act_.assign(gr.G.n, std::vector<int>(gr.R.n));
  for (int g = 0; g < gr.G.n; ++g)
    for (int r = 0; r < gr.R.n; ++r) gr.act_[g][r] = r;
  gr.validate();
  return gr;
}

// F_{p^d_total} with the cyclic group of order d_total/d_sub generated by the
// relative Frobenius x -> x^{p^{d_sub}}. The fixed subring is checked to have
// exactly p^{d_sub} elements.
inline GRing make_galois_gring(int p, int d_total, int d_sub,
                               std::optional<std::vector<int>> modulus =
                                   std::nullopt) {
  if (d_sub < 1 || d_total % d_sub != 0)
    throw ValidationError("subfield degree must divide total degree");
  if (!modulus) {
    modulus = default_modulus(p, d_total);
    if (!modulus)
      throw ConfigError("no default modulus for p=" + std::to_string(p) +
                        " d=" + std::to_string(d_total) +
                        "; supply one explicitly");
  }
  GRing gr;
  gr.R = make_finite_field(p, d_total, *modulus);
  int m = d_total / d_sub;
  gr.G = make_cyclic_group(m);
  int q = 1;
  for (int i = 0; i < d_sub; ++i) q *= p;
  auto pow_q = [&](int x) {
    int y = gr.R.one;
    for (int i = 0; i < q; ++i) y = gr.R.mul(y, x);
    return y;
  };
  std::vector<int> frob(gr.R.n);
  for (int r = 0; r < gr.R.n; ++r) frob[r] = pow_q(r);
  gr.act_.assign(m, std::vector<int>(gr.R.n));
  for (int r = 0; r < gr.R.n; ++r) gr.act_[0][r] = r;
  for (int k = 1; k < m; ++k)
    for (int r = 0; r < gr.R.n; ++r) gr.act_[k][r] = frob[gr.act_[k - 1][r]];
  gr.validate();
  std::vector<int> all(m);
  for (int i = 0; i < m; ++i) all[i] = i;
  int fixed = static_cast<int>(gr.fixed_elements(all).size());
  int expect = 1;
  for (int i = 0; i < d_sub; ++i) expect *= p;
  if (fixed != expect)
    throw ValidationError("fixed subring has " + std::to_string(fixed) +
                          " elements, expected " + std::to_string(expect));
  return gr;
}

// R x R with C2 swapping the factors; the Galois closure of the diagonal.
inline GRing make_swap_gring(const FiniteRing& R) {
  GRing gr;
  gr.R = product_ring(R, R);
  gr.G = make_cyclic_group(2);
  int n = R.n;
  gr.act_.assign(2, std::vector<int>(gr.R.n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      gr.act_[0][a * n + b] = a * n + b;
      gr.act_[1][a * n + b] = b * n + a;
    }
  gr.validate();
  return gr;
}

// Is |H| . 1 a unit of R? Gates the projectivity identifications downstream.
inline bool check_order_invertible(const GRing& gr,
                                   const std::vector<int>& H) {
  return gr.R.is_unit(gr.R.int_embed(static_cast<int>(H.size())));
}

}  // namespace hofix
