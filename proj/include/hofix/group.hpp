#pragma once
// Finite groups as multiplication tables, plus the preset zoo (C2, C3, C4, S3)
// and the subgroup/coset machinery used by fixed points, transfers and Mackey
// checks. Elements are indices into the table; presets put the identity at 0.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "hofix/common.hpp"

namespace hofix {

struct FiniteGroup {
  int n = 0;
  std::vector<int> mul_;  // n*n row-major; mul(a,b) = a*b
  std::vector<int> inv_;
  int e = 0;
  std::vector<std::string> names;

  int order() const { return n; }
  int mul(int a, int b) const { return mul_[a * n + b]; }
  int inv(int a) const { return inv_[a]; }
  const std::string& name(int a) const { return names[a]; }

  int elem_order(int a) const {
    int x = a, k = 1;
    while (x != e) {
      x = mul(x, a);
      ++k;
    }
    return k;
  }

  bool is_abelian() const {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  // Exhaustive axioms; throws ValidationError with a witness triple.
  void validate() const {
    if (n <= 0 || static_cast<int>(mul_.size()) != n * n)
      throw ValidationError("group table has wrong size");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int ab = mul(a, b);
        if (ab < 0 || ab >= n)
          throw ValidationError("group table entry out of range at (" +
                                std::to_string(a) + "," + std::to_string(b) +
                                ")");
      }
    for (int a = 0; a < n; ++a) {
      if (mul(e, a) != a || mul(a, e) != a)
        throw ValidationError("identity law fails at element " +
                              std::to_string(a));
      if (mul(a, inv(a)) != e || mul(inv(a), a) != e)
        throw ValidationError("inverse law fails at element " +
                              std::to_string(a));
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw ValidationError("associativity fails at (" +
                                  std::to_string(a) + "," + std::to_string(b) +
                                  "," + std::to_string(c) + ")");
  }

  // Closure of a subset under mul and inv, sorted ascending.
  std::vector<int> generated_subgroup(std::vector<int> gens) const {
    std::vector<char> in(n, 0);
    in[e] = 1;
    std::vector<int> frontier{e};
    for (int g : gens)
      if (!in[g]) {
        in[g] = 1;
        frontier.push_back(g);
      }
    bool grew = true;
    while (grew) {
      grew = false;
      for (int a = 0; a < n; ++a)
        if (in[a])
          for (int b = 0; b < n; ++b)
            if (in[b]) {
              int ab = mul(a, b);
              if (!in[ab]) {
                in[ab] = 1;
                grew = true;
              }
            }
    }
    std::vector<int> out;
    for (int a = 0; a < n; ++a)
      if (in[a]) out.push_back(a);
    return out;
  }

  // All subgroups, sorted by (size, lexicographic element list).
  std::vector<std::vector<int>> subgroups() const {
    std::vector<std::vector<int>> found;
    auto add = [&](std::vector<int> h) {
      if (std::find(found.begin(), found.end(), h) == found.end())
        found.push_back(std::move(h));
    };
    add({e});
    // Generated subgroups of all subsets of size <= 2 already exhaust the
    // lattice for |G| <= 6; iterate to a fixed point with size-3 seeds to be
    // safe for slightly larger tables.
    for (int a = 0; a < n; ++a) add(generated_subgroup({a}));
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) add(generated_subgroup({a, b}));
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c) add(generated_subgroup({a, b, c}));
    std::sort(found.begin(), found.end(),
              [](const std::vector<int>& x, const std::vector<int>& y) {
                if (x.size() != y.size()) return x.size() < y.size();
                return x < y;
              });
    return found;
  }

  std::vector<int> conj_subgroup(int g, const std::vector<int>& h) const {
    std::vector<int> out;
    out.reserve(h.size());
    for (int x : h) out.push_back(mul(mul(g, x), inv(g)));
    std::sort(out.begin(), out.end());
    return out;
  }

  bool subset_contains(const std::vector<int>& sorted, int x) const {
    return std::binary_search(sorted.begin(), sorted.end(), x);
  }

  // Greedy minimal generating set of a subgroup (elements ascending).
  std::vector<int> minimal_generators(const std::vector<int>& h) const {
    std::vector<int> gens;
    std::vector<int> have{e};
    for (int x : h) {
      if (std::binary_search(have.begin(), have.end(), x)) continue;
      gens.push_back(x);
      have = generated_subgroup(gens);
      std::sort(have.begin(), have.end());
      if (have == h) break;
    }
    return gens;
  }

  // Left cosets gH, each sorted; cosets ordered by their minimal element.
  std::vector<std::vector<int>> left_cosets(const std::vector<int>& h) const {
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> cosets;
    for (int g = 0; g < n; ++g) {
      if (seen[g]) continue;
      std::vector<int> c;
      for (int x : h) c.push_back(mul(g, x));
      std::sort(c.begin(), c.end());
      for (int y : c) seen[y] = 1;
      cosets.push_back(std::move(c));
    }
    std::sort(cosets.begin(), cosets.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                return a.front() < b.front();
              });
    return cosets;
  }

  // Double cosets HgK, ordered by minimal element.
  std::vector<std::vector<int>> double_cosets(const std::vector<int>& h,
                                              const std::vector<int>& k) const {
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> out;
    for (int g = 0; g < n; ++g) {
      if (seen[g]) continue;
      std::vector<int> c;
      for (int a : h)
        for (int b : k) {
          int x = mul(mul(a, g), b);
          if (!seen[x]) {
            seen[x] = 1;
            c.push_back(x);
          }
        }
      std::sort(c.begin(), c.end());
      out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                return a.front() < b.front();
              });
    return out;
  }

  // The subgroup as a standalone group; mapping[i] = parent index of element i.
  std::pair<FiniteGroup, std::vector<int>> subgroup_as_group(
      const std::vector<int>& h) const {
    std::vector<int> elems = h;
    std::sort(elems.begin(), elems.end());
    int m = static_cast<int>(elems.size());
    std::map<int, int> idx;
    for (int i = 0; i < m; ++i) idx[elems[i]] = i;
    FiniteGroup s;
    s.n = m;
    s.mul_.assign(m * m, 0);
    s.inv_.assign(m, 0);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        auto it = idx.find(mul(elems[i], elems[j]));
        if (it == idx.end())
          throw ValidationError("subset is not closed under multiplication");
        s.mul_[i * m + j] = it->second;
      }
      s.inv_[i] = idx.at(inv(elems[i]));
      s.names.push_back(names.empty() ? std::to_string(elems[i])
                                      : names[elems[i]]);
    }
    s.e = idx.at(e);
    s.validate();
    return {s, elems};
  }
};

// Build a group from an arbitrary multiplication callback; finds the
// identity and inverses, then validates.
template <class MulFn>
FiniteGroup make_group_from_mul(int n, MulFn&& mul, std::vector<std::string> names = {}) {
  FiniteGroup G;
  G.n = n;
  G.mul_.assign(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) G.mul_[a * n + b] = mul(a, b);
  G.e = -1;
  for (int c = 0; c < n; ++c) {
    bool id = true;
    for (int a = 0; a < n && id; ++a)
      if (G.mul(c, a) != a || G.mul(a, c) != a) id = false;
    if (id) {
      G.e = c;
      break;
    }
  }
  if (G.e < 0) throw ValidationError("multiplication table has no identity");
  G.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (G.mul(a, b) == G.e && G.mul(b, a) == G.e) {
        G.inv_[a] = b;
        break;
      }
  G.names = std::move(names);
  if (G.names.empty()) {
    for (int a = 0; a < n; ++a) G.names.push_back("p" + std::to_string(a));
    G.names[G.e] = "e";
  }
  G.validate();
  return G;
}

// Direct product, index a*|B|+b.
inline FiniteGroup product_group(const FiniteGroup& A, const FiniteGroup& B) {
  std::vector<std::string> names;
  for (int a = 0; a < A.n; ++a)
    for (int b = 0; b < B.n; ++b) names.push_back("(" + A.name(a) + "," + B.name(b) + ")");
  return make_group_from_mul(
      A.n * B.n,
      [&](int x, int y) {
        return A.mul(x / B.n, y / B.n) * B.n + B.mul(x % B.n, y % B.n);
      },
      std::move(names));
}

inline FiniteGroup make_cyclic_group(int m) {
  FiniteGroup g;
  g.n = m;
  g.e = 0;
  g.mul_.assign(m * m, 0);
  g.inv_.assign(m, 0);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) g.mul_[a * m + b] = (a + b) % m;
    g.inv_[a] = (m - a) % m;
    g.names.push_back(a == 0 ? "e" : (a == 1 ? "g" : "g^" + std::to_string(a)));
  }
  g.validate();
  return g;
}

// S3 as permutations of {0,1,2}, listed in lexicographic one-line order:
// 012, 021, 102, 120, 201, 210. Composition (p*q)(x) = p(q(x)).
inline FiniteGroup make_symmetric3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  FiniteGroup g;
  g.n = 6;
  g.e = 0;
  g.mul_.assign(36, 0);
  g.inv_.assign(6, 0);
  auto index_of = [&](const std::array<int, 3>& q) {
    for (int i = 0; i < 6; ++i)
      if (perms[i] == q) return i;
    return -1;
  };
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> comp{};
      for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
      g.mul_[i * 6 + j] = index_of(comp);
    }
  for (int i = 0; i < 6; ++i) {
    std::array<int, 3> vi{};
    for (int x = 0; x < 3; ++x) vi[perms[i][x]] = x;
    g.inv_[i] = index_of(vi);
  }
  g.names = {"id", "(12)", "(01)", "(012)", "(021)", "(02)"};
  g.validate();
  return g;
}

inline FiniteGroup group_preset(const std::string& name) {
  if (name == "C1") return make_cyclic_group(1);
  if (name == "C2") return make_cyclic_group(2);
  if (name == "C3") return make_cyclic_group(3);
  if (name == "C4") return make_cyclic_group(4);
  if (name == "S3") return make_symmetric3();
  throw ConfigError("unknown group preset: " + name);
}

}  // namespace hofix
