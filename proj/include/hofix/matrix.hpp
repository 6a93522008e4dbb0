#pragma once
// Dense matrices over a FiniteRing. Entries are ring element indices and all
// arithmetic is table lookup. Determinants are cofactor expansions and
// inverses adjugates; both are fine at the sizes this library touches.

#include <optional>
#include <string>
#include <vector>

#include "hofix/common.hpp"
#include "hofix/gring.hpp"
#include "hofix/ring.hpp"

namespace hofix {

struct Mat {
  int rows = 0, cols = 0;
  std::vector<int> a;  // row-major

  Mat() = default;
  Mat(int r, int c, int fill) : rows(r), cols(c), a(static_cast<size_t>(r) * c, fill) {}
  int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  int at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  auto operator<=>(const Mat&) const = default;
};

inline Mat mat_zero(const FiniteRing& R, int r, int c) { return Mat(r, c, R.zero); }

inline Mat mat_eye(const FiniteRing& R, int n) {
  Mat m(n, n, R.zero);
  for (int i = 0; i < n; ++i) m.at(i, i) = R.one;
  return m;
}

inline Mat mat_scalar(const FiniteRing& R, int n, int r) {
  Mat m(n, n, R.zero);
  for (int i = 0; i < n; ++i) m.at(i, i) = r;
  return m;
}

inline Mat mat_add(const FiniteRing& R, const Mat& A, const Mat& B) {
  if (A.rows != B.rows || A.cols != B.cols) throw Error("matrix add: shape mismatch");
  Mat C(A.rows, A.cols, R.zero);
  for (size_t k = 0; k < A.a.size(); ++k) C.a[k] = R.add(A.a[k], B.a[k]);
  return C;
}

inline Mat mat_neg(const FiniteRing& R, const Mat& A) {
  Mat C = A;
  for (auto& x : C.a) x = R.neg(x);
  return C;
}

inline Mat mat_mul(const FiniteRing& R, const Mat& A, const Mat& B) {
  if (A.cols != B.rows) throw Error("matrix mul: shape mismatch");
  Mat C(A.rows, B.cols, R.zero);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      int aik = A.at(i, k);
      if (aik == R.zero) continue;
      for (int j = 0; j < B.cols; ++j)
        C.at(i, j) = R.add(C.at(i, j), R.mul(aik, B.at(k, j)));
    }
  return C;
}

inline std::vector<int> mat_vec(const FiniteRing& R, const Mat& A,
                                const std::vector<int>& v) {
  if (A.cols != static_cast<int>(v.size())) throw Error("matrix-vector: shape mismatch");
  std::vector<int> w(A.rows, R.zero);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j)
      w[i] = R.add(w[i], R.mul(A.at(i, j), v[j]));
  return w;
}

inline Mat mat_minor(const Mat& A, int row, int col) {
  Mat M(A.rows - 1, A.cols - 1, 0);
  for (int i = 0, mi = 0; i < A.rows; ++i) {
    if (i == row) continue;
    for (int j = 0, mj = 0; j < A.cols; ++j) {
      if (j == col) continue;
      M.at(mi, mj) = A.at(i, j);
      ++mj;
    }
    ++mi;
  }
  return M;
}

// Cofactor expansion along the first row. Exponential, fine for n <= 8.
inline int mat_det(const FiniteRing& R, const Mat& A) {
  if (A.rows != A.cols) throw Error("det of non-square matrix");
  if (!R.commutative) throw Error("det over a noncommutative ring");
  int n = A.rows;
  if (n == 0) return R.one;
  if (n == 1) return A.at(0, 0);
  if (n == 2)
    return R.sub(R.mul(A.at(0, 0), A.at(1, 1)), R.mul(A.at(0, 1), A.at(1, 0)));
  int d = R.zero;
  for (int j = 0; j < n; ++j) {
    if (A.at(0, j) == R.zero) continue;
    int c = R.mul(A.at(0, j), mat_det(R, mat_minor(A, 0, j)));
    d = (j % 2 == 0) ? R.add(d, c) : R.sub(d, c);
  }
  return d;
}

inline bool mat_is_invertible(const FiniteRing& R, const Mat& A) {
  return A.rows == A.cols && R.is_unit(mat_det(R, A));
}

inline std::optional<Mat> mat_inv(const FiniteRing& R, const Mat& A) {
  if (A.rows != A.cols) throw Error("inverse of non-square matrix");
  int n = A.rows;
  int d = mat_det(R, A);
  if (!R.is_unit(d)) return std::nullopt;
  int dinv = R.inv_unit(d);
  Mat inv(n, n, R.zero);
  if (n == 0) return inv;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int c = mat_det(R, mat_minor(A, j, i));  // adjugate transposes
      if ((i + j) % 2 == 1) c = R.neg(c);
      inv.at(i, j) = R.mul(dinv, c);
    }
  return inv;
}

inline Mat mat_pow(const FiniteRing& R, Mat A, int k) {
  Mat P = mat_eye(R, A.rows);
  while (k > 0) {
    if (k & 1) P = mat_mul(R, P, A);
    A = mat_mul(R, A, A);
    k >>= 1;
  }
  return P;
}

inline Mat block_sum(const FiniteRing& R, const Mat& A, const Mat& B) {
  Mat C(A.rows + B.rows, A.cols + B.cols, R.zero);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
  for (int i = 0; i < B.rows; ++i)
    for (int j = 0; j < B.cols; ++j) C.at(A.rows + i, A.cols + j) = B.at(i, j);
  return C;
}

// P with P e_i = e_{perm[i]}.
inline Mat perm_mat(const FiniteRing& R, const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  Mat P(n, n, R.zero);
  for (int i = 0; i < n; ++i) P.at(perm[i], i) = R.one;
  return P;
}

// The block swap R^m (+) R^n -> R^n (+) R^m sending (x, y) to (y, x).
inline Mat symmetry_mat(const FiniteRing& R, int m, int n) {
  std::vector<int> perm(m + n);
  for (int i = 0; i < m; ++i) perm[i] = n + i;
  for (int j = 0; j < n; ++j) perm[m + j] = j;
  return perm_mat(R, perm);
}

inline Mat mat_act(const GRing& gr, int g, const Mat& A) {
  Mat B = A;
  for (auto& x : B.a) x = gr.act(g, x);
  return B;
}

inline std::vector<int> ring_units(const FiniteRing& R) {
  std::vector<int> u;
  for (int r = 0; r < R.n; ++r)
    if (R.is_unit(r)) u.push_back(r);
  return u;
}

// All invertible n x n matrices, in odometer order on the flattened entry
// vector. Deterministic, budget-charged per candidate.
inline std::vector<Mat> enumerate_gl(const FiniteRing& R, int n,
                                     const Budget& budget = Budget{}) {
  std::vector<Mat> out;
  if (n == 0) {
    out.push_back(Mat(0, 0, R.zero));
    return out;
  }
  Mat M(n, n, 0);
  size_t cells = M.a.size();
  while (true) {
    budget.charge(static_cast<long long>(cells), "GL enumeration");
    if (mat_is_invertible(R, M)) out.push_back(M);
    size_t k = cells;
    while (k > 0) {
      --k;
      if (++M.a[k] < R.n) break;
      M.a[k] = 0;
      if (k == 0) return out;
    }
  }
}

inline long long gl_order_for_field(long long q, int n) {
  long long qn = 1;
  for (int i = 0; i < n; ++i) qn *= q;
  long long ord = 1, qi = 1;
  for (int i = 0; i < n; ++i) {
    ord *= (qn - qi);
    qi *= q;
  }
  return ord;
}

// Elementary transvections plus one-slot diagonal units. Generates GL_n over
// a field and, componentwise, over a finite product of fields.
inline std::vector<Mat> gl_generators(const FiniteRing& R, int n) {
  std::vector<Mat> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int r = 0; r < R.n; ++r) {
        if (r == R.zero) continue;
        Mat E = mat_eye(R, n);
        E.at(i, j) = r;
        gens.push_back(E);
      }
    }
  for (int u : ring_units(R)) {
    if (u == R.one) continue;
    Mat D = mat_eye(R, n);
    if (n > 0) D.at(0, 0) = u;
    gens.push_back(D);
  }
  return gens;
}

inline std::string mat_name(const FiniteRing& R, const Mat& A) {
  std::string s = "[";
  for (int i = 0; i < A.rows; ++i) {
    if (i) s += "; ";
    for (int j = 0; j < A.cols; ++j) {
      if (j) s += ",";
      s += R.name(A.at(i, j));
    }
  }
  s += "]";
  return s;
}

// The full n x n matrix ring as a FiniteRing; element index is the odometer
// code of the flattened entries (row-major, most significant first).
inline int mat_ring_index(const FiniteRing& R, const Mat& A) {
  int idx = 0;
  for (int x : A.a) idx = idx * R.n + x;
  return idx;
}

inline Mat mat_ring_decode(const FiniteRing& R, int n, int idx) {
  Mat A(n, n, 0);
  for (size_t k = A.a.size(); k-- > 0;) {
    A.a[k] = idx % R.n;
    idx /= R.n;
  }
  return A;
}

inline FiniteRing make_matrix_ring(const FiniteRing& R, int n) {
  long long size = 1;
  for (int k = 0; k < n * n; ++k) {
    size *= R.n;
    if (size > 1024) throw Error("matrix ring too large to materialize");
  }
  FiniteRing M;
  M.n = static_cast<int>(size);
  M.add_.assign(static_cast<size_t>(M.n) * M.n, 0);
  M.mul_.assign(static_cast<size_t>(M.n) * M.n, 0);
  std::vector<Mat> elems(M.n);
  for (int i = 0; i < M.n; ++i) elems[i] = mat_ring_decode(R, n, i);
  for (int i = 0; i < M.n; ++i)
    for (int j = 0; j < M.n; ++j) {
      M.add_[static_cast<size_t>(i) * M.n + j] =
          mat_ring_index(R, mat_add(R, elems[i], elems[j]));
      M.mul_[static_cast<size_t>(i) * M.n + j] =
          mat_ring_index(R, mat_mul(R, elems[i], elems[j]));
    }
  M.zero = mat_ring_index(R, mat_zero(R, n, n));
  M.one = mat_ring_index(R, mat_eye(R, n));
  M.names.resize(M.n);
  for (int i = 0; i < M.n; ++i) M.names[i] = mat_name(R, elems[i]);
  M.finish();
  M.validate();
  return M;
}

}  // namespace hofix
