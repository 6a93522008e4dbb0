#pragma once
// Pseudo equivariant functors: a functor Th between G-categories plus
// comparison isos theta_g(a): Th(g.a) -> g.Th(a) that are natural in a,
// have theta_e = id, and satisfy the coherence
// theta_{gh}(a) = (g.theta_h(a)) . theta_g(h.a).

#include <optional>
#include <string>
#include <vector>

#include "hofix/gcategory.hpp"

namespace hofix {

struct PseudoEqFunctor {
  GCategory C, D;
  Functor Th;
  std::vector<std::vector<int>> theta;  // theta[g][a]
};

struct PseudoReport {
  std::optional<std::string> violation;
  bool strict = false;  // every comparison iso is an identity
  bool ok() const { return !violation.has_value(); }
  std::string summary() const {
    if (violation) return *violation;
    return strict ? "strictly equivariant" : "pseudo equivariant";
  }
};

inline PseudoReport validate_pseudo(const PseudoEqFunctor& P,
                                    const Budget& budget = Budget{}) {
  PseudoReport rep;
  const GCategory& C = P.C;
  const GCategory& D = P.D;
  if (C.G.n != D.G.n) {
    rep.violation = "source and target act under different groups";
    return rep;
  }
  if (auto v = functor_violation(C.cat, D.cat, P.Th)) {
    rep.violation = v;
    return rep;
  }
  if (static_cast<int>(P.theta.size()) != C.G.n) {
    rep.violation = "comparison table has wrong group size";
    return rep;
  }
  for (int g = 0; g < C.G.n; ++g) {
    if (static_cast<int>(P.theta[g].size()) != C.cat.nobj) {
      rep.violation = "comparison table has wrong object count";
      return rep;
    }
    for (int a = 0; a < C.cat.nobj; ++a) {
      int t = P.theta[g][a];
      if (t < 0 || t >= D.cat.nmor() ||
          D.cat.src[t] != P.Th.ob[C.oact(g, a)] ||
          D.cat.tgt[t] != D.oact(g, P.Th.ob[a])) {
        rep.violation = "comparison at (" + C.G.name(g) + "," + C.cat.obj_name(a) +
                        ") has wrong endpoints";
        return rep;
      }
      if (!D.cat.is_iso(t)) {
        rep.violation = "comparison at (" + C.G.name(g) + "," + C.cat.obj_name(a) +
                        ") is not invertible";
        return rep;
      }
    }
  }
  for (int a = 0; a < C.cat.nobj; ++a)
    if (P.theta[C.G.e][a] != D.cat.idm[P.Th.ob[a]]) {
      rep.violation = "comparison at the identity element is not the identity";
      return rep;
    }
  for (int g = 0; g < C.G.n; ++g)
    for (int f = 0; f < C.cat.nmor(); ++f) {
      budget.charge(1, "pseudo naturality checks");
      int a = C.cat.src[f], b = C.cat.tgt[f];
      int lhs = D.cat.compose(P.theta[g][b], P.Th.mor[C.mact(g, f)]);
      int rhs = D.cat.compose(D.mact(g, P.Th.mor[f]), P.theta[g][a]);
      if (lhs != rhs) {
        rep.violation = "comparison not natural at (" + C.G.name(g) + "," +
                        C.cat.mor_name(f) + ")";
        return rep;
      }
    }
  for (int g = 0; g < C.G.n; ++g)
    for (int h = 0; h < C.G.n; ++h)
      for (int a = 0; a < C.cat.nobj; ++a) {
        budget.charge(1, "pseudo coherence checks");
        int lhs = P.theta[C.G.mul(g, h)][a];
        int rhs = D.cat.compose(D.mact(g, P.theta[h][a]), P.theta[g][C.oact(h, a)]);
        if (lhs != rhs) {
          rep.violation = "coherence fails at (" + C.G.name(g) + "," + C.G.name(h) +
                          "," + C.cat.obj_name(a) + ")";
          return rep;
        }
      }
  rep.strict = true;
  for (int g = 0; g < C.G.n && rep.strict; ++g)
    for (int a = 0; a < C.cat.nobj && rep.strict; ++a)
      if (P.theta[g][a] != D.cat.idm[P.Th.ob[C.oact(g, a)]]) rep.strict = false;
  return rep;
}

// Wrap a strictly equivariant functor with identity comparisons.
inline PseudoEqFunctor strict_pseudo(GCategory C, GCategory D, Functor F) {
  PseudoEqFunctor P;
  P.theta.assign(C.G.n, std::vector<int>(C.cat.nobj));
  for (int g = 0; g < C.G.n; ++g)
    for (int a = 0; a < C.cat.nobj; ++a)
      P.theta[g][a] = D.cat.idm[F.ob[C.oact(g, a)]];
  P.C = std::move(C);
  P.D = std::move(D);
  P.Th = std::move(F);
  return P;
}

}  // namespace hofix
