#pragma once
// Finite rings as explicit addition/multiplication tables. Fields come from an
// explicit modulus polynomial over F_p (no Conway database); elements of
// F_p[x]/(m) are indexed by sum c_i p^i, and named by their polynomial.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hofix/common.hpp"

namespace hofix {

struct FieldInfo {
  int p = 0;
  int d = 0;
  std::vector<int> modulus;  // c_0..c_d with c_d = 1
};

struct FiniteRing {
  int n = 0;
  std::vector<int> add_, mul_;  // n*n row-major
  std::vector<int> neg_;
  std::vector<int> unit_inv_;  // inverse index, or -1 if not a unit
  int zero = 0, one = 0;
  bool commutative = false;
  std::vector<std::string> names;
  std::optional<FieldInfo> field;

  int add(int a, int b) const { return add_[a * n + b]; }
  int mul(int a, int b) const { return mul_[a * n + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  bool is_unit(int a) const { return unit_inv_[a] >= 0; }
  int inv_unit(int a) const {
    if (!is_unit(a))
      throw ValidationError("element " + name(a) + " is not a unit");
    return unit_inv_[a];
  }
  const std::string& name(int a) const { return names[a]; }

  bool is_field() const {
    if (n < 2 || !commutative) return false;
    for (int a = 0; a < n; ++a)
      if (a != zero && !is_unit(a)) return false;
    return true;
  }

  // Derived tables; call after filling add_/mul_/zero/one/names.
  void finish() {
    neg_.assign(n, -1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (add(a, b) == zero) neg_[a] = b;
    unit_inv_.assign(n, -1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (mul(a, b) == one && mul(b, a) == one) unit_inv_[a] = b;
    commutative = true;
    for (int a = 0; a < n && commutative; ++a)
      for (int b = 0; b < n; ++b)
        if (mul(a, b) != mul(b, a)) {
          commutative = false;
          break;
        }
  }

  // Exhaustive ring axioms; O(n^3), fine for the desk-scale tables here.
  void validate() const {
    if (n <= 0 || static_cast<int>(add_.size()) != n * n ||
        static_cast<int>(mul_.size()) != n * n)
      throw ValidationError("ring tables have wrong size");
    auto bad = [&](const std::string& law, int a, int b, int c) {
      throw ValidationError(law + " fails at (" + std::to_string(a) + "," +
                            std::to_string(b) + "," + std::to_string(c) + ")");
    };
    for (int a = 0; a < n; ++a) {
      if (add(zero, a) != a) bad("additive identity", a, 0, 0);
      if (neg_[a] < 0) bad("additive inverse", a, 0, 0);
      if (mul(one, a) != a || mul(a, one) != a) bad("multiplicative identity", a, 0, 0);
      for (int b = 0; b < n; ++b) {
        if (add(a, b) != add(b, a)) bad("additive commutativity", a, b, 0);
        for (int c = 0; c < n; ++c) {
          if (add(add(a, b), c) != add(a, add(b, c)))
            bad("additive associativity", a, b, c);
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            bad("multiplicative associativity", a, b, c);
          if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
            bad("left distributivity", a, b, c);
          if (mul(add(a, b), c) != add(mul(a, c), mul(b, c)))
            bad("right distributivity", a, b, c);
        }
      }
    }
  }

  // n copies of 1 summed; used for order-invertibility checks.
  int int_embed(int k) const {
    int x = zero;
    for (int i = 0; i < k; ++i) x = add(x, one);
    return x;
  }
};

namespace polydetail {

// Dense coefficient vectors over F_p, constant term first, no trailing zeros.
inline std::vector<int> trim(std::vector<int> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

inline std::vector<int> poly_mul(const std::vector<int>& a,
                                 const std::vector<int>& b, int p) {
  if (a.empty() || b.empty()) return {};
  std::vector<int> c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return trim(std::move(c));
}

inline std::vector<int> poly_add(const std::vector<int>& a,
                                 const std::vector<int>& b, int p) {
  std::vector<int> c(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) {
    int x = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    c[i] = x % p;
  }
  return trim(std::move(c));
}

// Remainder of a modulo monic m.
inline std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m,
                                 int p) {
  a = trim(std::move(a));
  int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= dm) {
    int da = static_cast<int>(a.size()) - 1;
    int lead = a[da];  // m is monic, so subtract lead * x^{da-dm} * m
    for (int i = 0; i <= dm; ++i) {
      int idx = da - dm + i;
      a[idx] = ((a[idx] - lead * m[i]) % p + p) % p;
    }
    a = trim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::vector<int> index_to_poly(int idx, int p, int d) {
  std::vector<int> c(d, 0);
  for (int i = 0; i < d; ++i) {
    c[i] = idx % p;
    idx /= p;
  }
  return trim(std::move(c));
}

inline int poly_to_index(const std::vector<int>& c, int p) {
  int idx = 0, mult = 1;
  for (int coeff : c) {
    idx += coeff * mult;
    mult *= p;
  }
  return idx;
}

inline std::string poly_name(const std::vector<int>& c) {
  if (c.empty()) return "0";
  std::string s;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(c[i]);
    } else {
      if (c[i] != 1) s += std::to_string(c[i]);
      s += "x";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

// Trial division by all monic polynomials of degree 1..deg/2. Returns a
// factor as witness if reducible.
inline std::optional<std::vector<int>> reducible_witness(
    const std::vector<int>& m, int p) {
  int d = static_cast<int>(m.size()) - 1;
  for (int df = 1; df <= d / 2; ++df) {
    int count = 1;
    for (int i = 0; i < df; ++i) count *= p;
    for (int idx = 0; idx < count; ++idx) {
      std::vector<int> f = index_to_poly(idx, p, df);
      f.resize(df + 1, 0);
      f[df] = 1;  // monic
      if (poly_mod(m, f, p).empty()) return f;
    }
  }
  return std::nullopt;
}

}  // namespace polydetail

inline FiniteRing make_prime_field(int p) {
  if (!polydetail::is_prime(p))
    throw ValidationError(std::to_string(p) + " is not prime");
  FiniteRing r;
  r.n = p;
  r.zero = 0;
  r.one = 1 % p;
  r.add_.assign(p * p, 0);
  r.mul_.assign(p * p, 0);
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < p; ++b) {
      r.add_[a * p + b] = (a + b) % p;
      r.mul_[a * p + b] = (a * b) % p;
    }
    r.names.push_back(std::to_string(a));
  }
  r.field = FieldInfo{p, 1, {0, 1}};
  r.finish();
  r.validate();
  return r;
}

// F_p[x]/(modulus). modulus = c_0..c_d, monic, irreducible (checked; the
// rejection message carries a factor witness).
inline FiniteRing make_finite_field(int p, int d,
                                    const std::vector<int>& modulus) {
  using namespace polydetail;
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  if (d < 1) throw ValidationError("field degree must be >= 1");
  if (static_cast<int>(modulus.size()) != d + 1 || modulus[d] != 1)
    throw ValidationError("modulus must be monic of degree " +
                          std::to_string(d));
  for (int c : modulus)
    if (c < 0 || c >= p)
      throw ValidationError("modulus coefficients must lie in 0.." +
                            std::to_string(p - 1));
  if (auto f = reducible_witness(modulus, p))
    throw ValidationError("modulus is reducible; factor " + poly_name(*f));

  int q = 1;
  for (int i = 0; i < d; ++i) q *= p;
  FiniteRing r;
  r.n = q;
  r.zero = 0;
  r.one = 1;
  r.add_.assign(q * q, 0);
  r.mul_.assign(q * q, 0);
  for (int a = 0; a < q; ++a) {
    std::vector<int> pa = index_to_poly(a, p, d);
    for (int b = 0; b < q; ++b) {
      std::vector<int> pb = index_to_poly(b, p, d);
      r.add_[a * q + b] = poly_to_index(poly_add(pa, pb, p), p);
      r.mul_[a * q + b] =
          poly_to_index(poly_mod(poly_mul(pa, pb, p), modulus, p), p);
    }
    r.names.push_back(poly_name(pa));
  }
  r.field = FieldInfo{p, d, modulus};
  r.finish();
  r.validate();
  if (!r.is_field())
    throw ValidationError("constructed table is not a field");
  return r;
}

// Componentwise product; element index a*|B| + b, named "(a,b)".
inline FiniteRing product_ring(const FiniteRing& A, const FiniteRing& B) {
  FiniteRing r;
  r.n = A.n * B.n;
  auto pack = [&](int a, int b) { return a * B.n + b; };
  r.zero = pack(A.zero, B.zero);
  r.one = pack(A.one, B.one);
  r.add_.assign(r.n * r.n, 0);
  r.mul_.assign(r.n * r.n, 0);
  for (int a1 = 0; a1 < A.n; ++a1)
    for (int b1 = 0; b1 < B.n; ++b1) {
      r.names.push_back("(" + A.name(a1) + "," + B.name(b1) + ")");
      for (int a2 = 0; a2 < A.n; ++a2)
        for (int b2 = 0; b2 < B.n; ++b2) {
          int x = pack(a1, b1), y = pack(a2, b2);
          r.add_[x * r.n + y] = pack(A.add(a1, a2), B.add(b1, b2));
          r.mul_[x * r.n + y] = pack(A.mul(a1, a2), B.mul(b1, b2));
        }
    }
  r.finish();
  r.validate();
  return r;
}

// Default irreducible moduli for the handful of fields the presets use.
inline std::optional<std::vector<int>> default_modulus(int p, int d) {
  if (d == 1) return std::vector<int>{0, 1};
  if (p == 2 && d == 2) return std::vector<int>{1, 1, 1};        // x^2+x+1
  if (p == 2 && d == 3) return std::vector<int>{1, 1, 0, 1};     // x^3+x+1
  if (p == 2 && d == 4) return std::vector<int>{1, 1, 0, 0, 1};  // x^4+x+1
  if (p == 3 && d == 2) return std::vector<int>{1, 0, 1};        // x^2+1
  if (p == 3 && d == 3) return std::vector<int>{1, 2, 0, 1};     // x^3+2x+1
  if (p == 5 && d == 2) return std::vector<int>{1, 1, 1};        // x^2+x+1
  return std::nullopt;
}

}  // namespace hofix
