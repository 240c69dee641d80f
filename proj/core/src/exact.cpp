#include "dihedral/exact.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

#include "dihedral/errors.hpp"

namespace dih {

IMat imat(const std::vector<std::vector<long>>& rows) {
  int r = int(rows.size()), c = r ? int(rows[0].size()) : 0;
  IMat m(r, c);
  for (int i = 0; i < r; ++i) {
    require(int(rows[i].size()) == c, "ragged matrix");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IMat mul(const IMat& x, const IMat& y) {
  require(x.cols == y.rows, "matrix shape mismatch");
  IMat z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x(i, k) == 0) continue;
      for (int j = 0; j < y.cols; ++j) z(i, j) += x(i, k) * y(k, j);
    }
  return z;
}

IMat add(const IMat& x, const IMat& y) {
  require(x.rows == y.rows && x.cols == y.cols, "matrix shape mismatch");
  IMat z = x;
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
  return z;
}

IMat sub(const IMat& x, const IMat& y) {
  require(x.rows == y.rows && x.cols == y.cols, "matrix shape mismatch");
  IMat z = x;
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
  return z;
}

IVec mul(const IMat& x, const IVec& v) {
  require(int(v.size()) == x.cols, "vector length mismatch");
  IVec out(x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j)
      if (v[j] != 0) out[i] += x(i, j) * v[j];
  return out;
}

QMat to_q(const IMat& m) {
  QMat q(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) q.a[i] = Rat(m.a[i]);
  return q;
}

Int det(const IMat& m) {
  require(m.rows == m.cols, "determinant of non-square matrix");
  int n = m.rows;
  if (n == 0) return 1;
  IMat a = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(r, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

int rank_q(const QMat& m0) {
  QMat m = m0;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m(i, c) != 0) { piv = i; break; }
    if (piv < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m(r, j), m(piv, j));
    for (int i = r + 1; i < m.rows; ++i) {
      if (m(i, c) == 0) continue;
      Rat f = m(i, c) / m(r, c);
      for (int j = c; j < m.cols; ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

int rank_q(const IMat& m) { return rank_q(to_q(m)); }

namespace {

void swap_rows(IMat& m, int a, int b) {
  if (a != b)
    for (int j = 0; j < m.cols; ++j) std::swap(m(a, j), m(b, j));
}
void swap_cols(IMat& m, int a, int b) {
  if (a != b)
    for (int i = 0; i < m.rows; ++i) std::swap(m(i, a), m(i, b));
}
// row a -= q * row b
void row_axpy(IMat& m, int a, int b, const Int& q) {
  for (int j = 0; j < m.cols; ++j)
    if (m(b, j) != 0) m(a, j) -= q * m(b, j);
}
void col_axpy(IMat& m, int a, int b, const Int& q) {
  for (int i = 0; i < m.rows; ++i)
    if (m(i, b) != 0) m(i, a) -= q * m(i, b);
}

}  // namespace

Smith smith(const IMat& A, bool tr) {
  IMat D = A;
  Smith s;
  if (tr) {
    s.U = IMat::identity(A.rows);
    s.V = IMat::identity(A.cols);
  }
  int n = std::min(D.rows, D.cols);
  int t = 0;
  for (; t < n; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block
      int pi = -1, pj = -1;
      for (int i = t; i < D.rows; ++i)
        for (int j = t; j < D.cols; ++j)
          if (D(i, j) != 0 && (pi < 0 || abs(D(i, j)) < abs(D(pi, pj)))) pi = i, pj = j;
      if (pi < 0) goto done;
      swap_rows(D, t, pi);
      swap_cols(D, t, pj);
      if (tr) {
        swap_rows(s.U, t, pi);
        swap_cols(s.V, t, pj);
      }
      bool clean = true;
      for (int i = t + 1; i < D.rows; ++i) {
        if (D(i, t) == 0) continue;
        Int q = D(i, t) / D(t, t);
        row_axpy(D, i, t, q);
        if (tr) row_axpy(s.U, i, t, q);
        if (D(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < D.cols; ++j) {
        if (D(t, j) == 0) continue;
        Int q = D(t, j) / D(t, t);
        col_axpy(D, j, t, q);
        if (tr) col_axpy(s.V, j, t, q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility of the remaining block
      int bad = -1;
      for (int i = t + 1; i < D.rows && bad < 0; ++i)
        for (int j = t + 1; j < D.cols; ++j)
          if (D(i, j) % D(t, t) != 0) { bad = i; break; }
      if (bad < 0) break;
      row_axpy(D, t, bad, -1);
      if (tr) row_axpy(s.U, t, bad, -1);
    }
    if (D(t, t) < 0) {
      for (int j = 0; j < D.cols; ++j) D(t, j) = -D(t, j);
      if (tr)
        for (int j = 0; j < s.U.cols; ++j) s.U(t, j) = -s.U(t, j);
    }
    s.diag.push_back(D(t, t));
  }
done:
  s.rank = int(s.diag.size());
  return s;
}

Homology homology(const IMat& d_out, const IMat& d_in, int dim) {
  int r_out = d_out.rows * d_out.cols ? rank_q(d_out) : 0;
  Homology h;
  int r_in = 0;
  if (d_in.rows * d_in.cols) {
    Smith s = smith(d_in);
    r_in = s.rank;
    for (auto& d : s.diag)
      if (d > 1) h.torsion.push_back(d);
  }
  h.free_rank = dim - r_out - r_in;
  std::sort(h.torsion.begin(), h.torsion.end());
  return h;
}

std::optional<QVec> solve_q(const QMat& A0, const QVec& b0) {
  require(int(b0.size()) == A0.rows, "rhs length mismatch");
  int m = A0.rows, n = A0.cols;
  QMat A(m, n + 1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) A(i, j) = A0(i, j);
    A(i, n) = b0[i];
  }
  std::vector<int> pivcol;
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int piv = -1;
    for (int i = r; i < m; ++i)
      if (A(i, c) != 0) { piv = i; break; }
    if (piv < 0) continue;
    for (int j = 0; j <= n; ++j) std::swap(A(r, j), A(piv, j));
    Rat inv = 1 / A(r, c);
    for (int j = c; j <= n; ++j) A(r, j) *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == r || A(i, c) == 0) continue;
      Rat f = A(i, c);
      for (int j = c; j <= n; ++j) A(i, j) -= f * A(r, j);
    }
    pivcol.push_back(c);
    ++r;
  }
  for (int i = r; i < m; ++i)
    if (A(i, n) != 0) return std::nullopt;
  QVec x(n);
  for (int i = 0; i < r; ++i) x[pivcol[i]] = A(i, n);
  return x;
}

int64_t mod(long long a, int64_t p) {
  long long r = a % p;
  return r < 0 ? r + p : r;
}

int64_t pow_mod(int64_t a, int64_t e, int64_t p) {
  __int128 r = 1, b = mod(a, p);
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return int64_t(r);
}

int64_t inv_mod(int64_t a, int64_t p) {
  int64_t r0 = mod(a, p), r1 = p, s0 = 1, s1 = 0;
  while (r1 != 0) {
    int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  if (r0 != 1) throw InvalidInput("not invertible mod " + std::to_string(p));
  return mod(s0, p);
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> f;
  for (long long d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      if (f.empty() || f.back() != d) f.push_back(d);
      n /= d;
    }
  if (n > 1) f.push_back(n);
  return f;
}

bool square_free(long long n) {
  for (long long d = 2; d * d <= n; ++d)
    if (n % (d * d) == 0) return false;
  return n >= 1;
}

namespace {

// in-place RREF mod p, returns pivot columns
std::vector<int> rref_mod_p(std::vector<std::vector<int64_t>>& A, int ncols, int64_t p) {
  std::vector<int> piv;
  int r = 0, m = int(A.size());
  for (int c = 0; c < ncols && r < m; ++c) {
    int pr = -1;
    for (int i = r; i < m; ++i)
      if (A[i][c] % p != 0) { pr = i; break; }
    if (pr < 0) continue;
    std::swap(A[r], A[pr]);
    int64_t inv = inv_mod(A[r][c], p);
    for (int j = 0; j < ncols; ++j) A[r][j] = int64_t(__int128(mod(A[r][j], p)) * inv % p);
    for (int i = 0; i < m; ++i) {
      if (i == r) continue;
      int64_t f = mod(A[i][c], p);
      if (!f) continue;
      for (int j = 0; j < ncols; ++j) A[i][j] = mod(int64_t((A[i][j] - __int128(f) * A[r][j]) % p), p);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

}  // namespace

std::vector<std::vector<int64_t>> kernel_mod_p(const std::vector<std::vector<int64_t>>& A0, int ncols,
                                               int64_t p) {
  auto A = A0;
  for (auto& row : A) {
    require(int(row.size()) == ncols, "ragged matrix");
    for (auto& x : row) x = mod(x, p);
  }
  auto piv = rref_mod_p(A, ncols, p);
  std::vector<char> is_piv(ncols, 0);
  for (int c : piv) is_piv[c] = 1;
  std::vector<std::vector<int64_t>> basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    std::vector<int64_t> v(ncols, 0);
    v[f] = 1;
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = mod(-A[i][f], p);
    basis.push_back(v);
  }
  return basis;
}

int rank_mod_p(std::vector<std::vector<int64_t>> A, int ncols, int64_t p) {
  for (auto& row : A)
    for (auto& x : row) x = mod(x, p);
  return int(rref_mod_p(A, ncols, p).size());
}

std::string to_string(const Rat& q0) {
  Rat q = q0;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace dih
