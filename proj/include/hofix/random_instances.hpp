#pragma once
// Randomized pseudo equivariant functors for stress-testing the
// strictification machinery. Three families:
//
//  - chaotic: both categories chaotic on random finite G-sets, random
//    object map, all comparison isos forced. Always an equivalence.
//  - inner: one-object categories on a group with G-action, the functor
//    conjugates by a random unit u, theta_g = (g.u)u^{-1}. Always an
//    equivalence; coherence holds by a direct computation.
//  - discrete: a discrete G-set mapped into a chaotic category. Valid
//    pseudo data, but not full once the source has two or more points,
//    so these exercise the non-equivalence path.

#include <random>
#include <string>
#include <vector>

#include "hofix/h1.hpp"
#include "hofix/pseudo.hpp"

namespace hofix {

struct RandomPseudoInstance {
  PseudoEqFunctor P;
  bool is_equivalence = false;
  std::string family;
};

// A random finite G-set of 1..max_size points as a permutation table,
// built from fixed points and free orbits.
inline std::vector<std::vector<int>> random_gset(const FiniteGroup& G, int max_size,
                                                 std::mt19937& rng) {
  int target = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_size));
  std::vector<int> orbit_sizes;
  int cur = 0;
  while (cur < target) {
    bool can_free = target - cur >= G.n;
    int s = (can_free && rng() % 2 == 0) ? G.n : 1;
    orbit_sizes.push_back(s);
    cur += s;
  }
  std::vector<std::vector<int>> perm(G.n, std::vector<int>(cur));
  int base = 0;
  for (int s : orbit_sizes) {
    for (int g = 0; g < G.n; ++g) {
      if (s == 1)
        perm[g][base] = base;
      else
        for (int i = 0; i < G.n; ++i) perm[g][base + i] = base + G.mul(g, i);
    }
    base += s;
  }
  return perm;
}

inline RandomPseudoInstance random_chaotic_instance(const FiniteGroup& G,
                                                    std::mt19937& rng) {
  auto permC = random_gset(G, 4, rng);
  auto permD = random_gset(G, 4, rng);
  int mC = static_cast<int>(permC[0].size());
  int mD = static_cast<int>(permD[0].size());
  RandomPseudoInstance R;
  R.family = "chaotic";
  R.is_equivalence = true;
  R.P.C = chaotic_gcategory(mC, G, permC);
  R.P.D = chaotic_gcategory(mD, G, permD);
  auto midD = [&](int b, int a) { return b * mD + a; };
  R.P.Th.ob.resize(mC);
  for (int a = 0; a < mC; ++a) R.P.Th.ob[a] = static_cast<int>(rng() % mD);
  R.P.Th.mor.resize(mC * mC);
  for (int b = 0; b < mC; ++b)
    for (int a = 0; a < mC; ++a)
      R.P.Th.mor[b * mC + a] = midD(R.P.Th.ob[b], R.P.Th.ob[a]);
  R.P.theta.assign(G.n, std::vector<int>(mC));
  for (int g = 0; g < G.n; ++g)
    for (int a = 0; a < mC; ++a)
      R.P.theta[g][a] = midD(permD[g][R.P.Th.ob[a]], R.P.Th.ob[permC[g][a]]);
  return R;
}

inline RandomPseudoInstance random_inner_instance(const GGroup& W, std::mt19937& rng) {
  RandomPseudoInstance R;
  R.family = "inner";
  R.is_equivalence = true;
  R.P.C = group_as_gcategory(W.P, W.G, W.act);
  R.P.D = R.P.C;
  int u = static_cast<int>(rng() % W.P.n);
  R.P.Th.ob = {0};
  R.P.Th.mor.resize(W.P.n);
  for (int m = 0; m < W.P.n; ++m) R.P.Th.mor[m] = W.P.mul(u, W.P.mul(m, W.P.inv(u)));
  R.P.theta.assign(W.G.n, std::vector<int>(1));
  for (int g = 0; g < W.G.n; ++g) R.P.theta[g][0] = W.P.mul(W.a(g, u), W.P.inv(u));
  return R;
}

inline RandomPseudoInstance random_discrete_instance(const FiniteGroup& G,
                                                     std::mt19937& rng) {
  auto permC = random_gset(G, 4, rng);
  auto permD = random_gset(G, 4, rng);
  int mC = static_cast<int>(permC[0].size());
  int mD = static_cast<int>(permD[0].size());
  RandomPseudoInstance R;
  R.family = "discrete";
  R.is_equivalence = (mC == 1);
  R.P.C = discrete_gcategory(mC, G, permC);
  R.P.D = chaotic_gcategory(mD, G, permD);
  auto midD = [&](int b, int a) { return b * mD + a; };
  R.P.Th.ob.resize(mC);
  for (int a = 0; a < mC; ++a) R.P.Th.ob[a] = static_cast<int>(rng() % mD);
  R.P.Th.mor.resize(mC);
  for (int a = 0; a < mC; ++a) R.P.Th.mor[a] = midD(R.P.Th.ob[a], R.P.Th.ob[a]);
  R.P.theta.assign(G.n, std::vector<int>(mC));
  for (int g = 0; g < G.n; ++g)
    for (int a = 0; a < mC; ++a)
      R.P.theta[g][a] = midD(permD[g][R.P.Th.ob[a]], R.P.Th.ob[permC[g][a]]);
  return R;
}

// A deterministic mixed batch. The inner family draws its group-with-action
// instances from the H^1 battery, capped so the exponential categories stay
// small enough to materialize quickly.
inline std::vector<RandomPseudoInstance> make_random_pseudo_instances(int count,
                                                                      unsigned seed) {
  std::mt19937 rng(seed);
  FiniteGroup C2 = make_cyclic_group(2);
  FiniteGroup C3 = make_cyclic_group(3);
  std::vector<GGroup> pool;
  for (const auto& ni : h1_battery_instances()) {
    long long tilde_objects = 1;
    for (int i = 1; i < ni.W.G.n; ++i) tilde_objects *= ni.W.P.n;
    if (tilde_objects * tilde_objects * ni.W.P.n <= 4000) pool.push_back(ni.W);
  }
  if (pool.empty()) throw Error("no small instances available for the inner family");
  std::vector<RandomPseudoInstance> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    const FiniteGroup& G = (rng() % 2 == 0) ? C2 : C3;
    switch (i % 3) {
      case 0: out.push_back(random_chaotic_instance(G, rng)); break;
      case 1: out.push_back(random_inner_instance(pool[rng() % pool.size()], rng)); break;
      default: out.push_back(random_discrete_instance(G, rng)); break;
    }
  }
  return out;
}

}  // namespace hofix
