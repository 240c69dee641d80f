#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dih {

using Int = mpz_class;
using Rat = mpq_class;

template <class T>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<T> a;
  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}
  T& operator()(int i, int j) { return a[size_t(i) * cols + j]; }
  const T& operator()(int i, int j) const { return a[size_t(i) * cols + j]; }
  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  Mat transpose() const {
    Mat t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

using IMat = Mat<Int>;
using QMat = Mat<Rat>;
using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

IMat imat(const std::vector<std::vector<long>>& rows);
IMat mul(const IMat& x, const IMat& y);
IMat add(const IMat& x, const IMat& y);
IMat sub(const IMat& x, const IMat& y);
IVec mul(const IMat& x, const IVec& v);
QMat to_q(const IMat& m);

Int det(const IMat& m);  // Bareiss
int rank_q(const QMat& m);
int rank_q(const IMat& m);

struct Smith {
  IVec diag;     // nonzero invariant factors d1 | d2 | ..., positive
  int rank = 0;
  IMat U, V;     // U * A * V = D (filled only when requested)
};
Smith smith(const IMat& A, bool transforms = false);

// homology of a chain complex piece: rank of ker(d_out)/im(d_in) and torsion
struct Homology {
  int free_rank = 0;
  std::vector<Int> torsion;  // divisors > 1, ascending
};
// d_in : C_{k+1} -> C_k as (dim C_k) x (dim C_{k+1}), d_out : C_k -> C_{k-1}
Homology homology(const IMat& d_out, const IMat& d_in, int dim_ck);

// x with A x = b over Q, or nullopt
std::optional<QVec> solve_q(const QMat& A, const QVec& b);

// --- arithmetic mod a word-size prime ---
int64_t mod(long long a, int64_t p);
int64_t inv_mod(int64_t a, int64_t p);
int64_t pow_mod(int64_t a, int64_t e, int64_t p);
bool is_prime(long long n);
std::vector<long long> prime_factors(long long n);
bool square_free(long long n);

// basis of the right kernel of A mod p (p prime), in reduced echelon normal form
std::vector<std::vector<int64_t>> kernel_mod_p(const std::vector<std::vector<int64_t>>& A, int ncols, int64_t p);
int rank_mod_p(std::vector<std::vector<int64_t>> A, int ncols, int64_t p);

std::string to_string(const Rat& q);  // "n/d" or "n"

}  // namespace dih
