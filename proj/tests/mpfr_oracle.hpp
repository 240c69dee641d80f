#pragma once
// 100-digit floating reference for Hermitian signatures. Test use only.
#include <boost/multiprecision/mpfr.hpp>
#include <vector>

#include "dihedral/exact.hpp"

namespace oracle {

using Real = boost::multiprecision::mpfr_float_100;

// eigenvalues of a real symmetric matrix by cyclic Jacobi rotations
inline std::vector<Real> jacobi_eigenvalues(std::vector<std::vector<Real>> a) {
  int n = int(a.size());
  for (int sweep = 0; sweep < 100; ++sweep) {
    Real off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < Real("1e-180")) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (abs(a[p][q]) < Real("1e-190")) continue;
        Real theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        Real t = (theta >= 0 ? 1 : -1) / (abs(theta) + sqrt(theta * theta + 1));
        Real c = 1 / sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < n; ++k) {
          Real akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          Real apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<Real> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = a[i][i];
  return ev;
}

// signature of (1-w)L + (1-conj w)L^T, w = exp(2 pi i k/p), via the real
// 2n x 2n form [[A, -B], [B, A]] whose spectrum doubles that of A + iB.
// Returns {signature, smallest |eigenvalue|}.
inline std::pair<int, Real> tl_float(const dih::IMat& L, long p, long k) {
  int n = L.rows;
  Real th = 2 * boost::math::constants::pi<Real>() * k / p;
  Real c = cos(th), s = sin(th);
  std::vector<std::vector<Real>> R(2 * n, std::vector<Real>(2 * n, Real(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long l = L(i, j).get_si(), lt = L(j, i).get_si();
      Real A = (1 - c) * (l + lt), B = -s * (l - lt);
      R[i][j] = A, R[i + n][j + n] = A;
      R[i][j + n] = -B, R[i + n][j] = B;
    }
  auto ev = jacobi_eigenvalues(R);
  int sig = 0;
  Real mn = 1e100;
  for (auto& e : ev) {
    sig += e > 0 ? 1 : -1;
    if (abs(e) < mn) mn = abs(e);
  }
  return {sig / 2, mn};
}

}  // namespace oracle
