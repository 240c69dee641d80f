#include "dihedral/signatures.hpp"

#include <algorithm>
#include <vector>

#include "dihedral/errors.hpp"

namespace dih {

Inertia inertia(const QMat& M0) {
  require(M0.rows == M0.cols, "form must be square");
  require(M0 == M0.transpose(), "form must be symmetric");
  QMat M = M0;
  int n = M.rows;
  Inertia in;
  std::vector<int> act(n);
  for (int i = 0; i < n; ++i) act[i] = i;
  while (!act.empty()) {
    int k = -1;
    for (int i : act)
      if (sgn(M(i, i)) != 0) {
        k = i;
        break;
      }
    if (k < 0) {
      int r = -1, s = -1;
      for (int i : act)
        for (int j : act)
          if (r < 0 && i != j && sgn(M(i, j)) != 0) r = i, s = j;
      if (r < 0) {
        in.zero += int(act.size());
        break;
      }
      // e_r += e_s makes the diagonal entry 2 M(r, s)
      for (int j : act) M(r, j) += M(s, j);
      for (int j : act) M(j, r) += M(j, s);
      k = r;
    }
    Rat d = M(k, k);
    (sgn(d) > 0 ? in.pos : in.neg)++;
    act.erase(std::find(act.begin(), act.end(), k));
    for (int r : act) {
      if (sgn(M(r, k)) == 0) continue;
      Rat f = M(r, k) / d;
      for (int s : act) M(r, s) -= f * M(k, s);
    }
    for (int r : act) M(k, r) = M(r, k) = 0;
  }
  return in;
}

int matrix_signature(const QMat& M) { return inertia(M).signature(); }
int matrix_signature(const IMat& M) { return inertia(to_q(M)).signature(); }

namespace {

Rat floor_bits(const Rat& q, int b) {
  Int s = Int(1) << b, f;
  Int num = q.get_num() * s;
  mpz_fdiv_q(f.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
  return Rat(f, s);
}
Rat ceil_bits(const Rat& q, int b) {
  Int s = Int(1) << b, f;
  Int num = q.get_num() * s;
  mpz_cdiv_q(f.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
  return Rat(f, s);
}

// bounds on atan(1/x) from alternating partial sums
std::pair<Rat, Rat> atan_inv(long x, int bits) {
  Rat s = 0, prev = 0, t;
  Rat eps = Rat(1, 1) / Rat(Int(1) << (bits + 4));
  for (long m = 0;; ++m) {
    Int pw = 1;
    mpz_ui_pow_ui(pw.get_mpz_t(), x, 2 * m + 1);
    t = Rat(1) / (Rat(2 * m + 1) * Rat(pw));
    prev = s;
    s += m % 2 == 0 ? t : -t;
    if (m > 0 && t < eps) break;
  }
  return {std::min(s, prev), std::max(s, prev)};
}

std::pair<Rat, Rat> pi_bounds(int bits) {
  auto [a5lo, a5hi] = atan_inv(5, bits + 4);
  auto [a2lo, a2hi] = atan_inv(239, bits + 4);
  return {16 * a5lo - 4 * a2hi, 16 * a5hi - 4 * a2lo};
}

// bounds on cos x for rational 0 <= x <= 1.6
std::pair<Rat, Rat> cos_series(const Rat& x, int bits) {
  if (sgn(x) == 0) return {1, 1};
  Rat x2 = x * x, t = 1, s = 1, prev = 1;
  Rat eps = Rat(1) / Rat(Int(1) << (bits + 4));
  for (long m = 1;; ++m) {
    t *= x2 / Rat((2 * m - 1) * (2 * m));
    prev = s;
    s += m % 2 == 1 ? -t : t;
    if (m >= 2 && t < eps) break;
  }
  return {floor_bits(std::min(s, prev), bits + 8), ceil_bits(std::max(s, prev), bits + 8)};
}

}  // namespace

std::pair<Rat, Rat> cos_bounds(long j, long n, int bits) {
  require(n > 0, "bad root of unity order");
  j = mod(j, n);
  if (2 * j > n) j = n - j;
  if (j == 0) return {1, 1};
  if (4 * j == n) return {0, 0};
  auto [plo, phi] = pi_bounds(bits + 8);
  if (4 * j < n) {
    Rat f(2 * j, n);
    auto lo = cos_series(ceil_bits(phi * f, bits + 12), bits);
    auto hi = cos_series(floor_bits(plo * f, bits + 12), bits);
    return {lo.first, hi.second};
  }
  // cos t = -cos(pi - t), pi - t = pi (n - 2j) / n
  Rat f(n - 2 * j, n);
  auto lo = cos_series(ceil_bits(phi * f, bits + 12), bits);
  auto hi = cos_series(floor_bits(plo * f, bits + 12), bits);
  return {-hi.second, -lo.first};
}

namespace {

// Q(zeta_n) as Q[x] / Phi_n
struct Cyclo {
  long n;
  std::vector<Int> phi;  // monic, ascending coefficients
  int deg = 0;
  using El = std::vector<Rat>;

  explicit Cyclo(long n_) : n(n_) {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<Int> num(n + 1, 0);
    num[0] = -1, num[n] = 1;
    for (long d = 1; d < n; ++d)
      if (n % d == 0) num = divide(num, Cyclo(d).phi);
    phi = num;
    deg = int(phi.size()) - 1;
  }
  static std::vector<Int> divide(std::vector<Int> a, const std::vector<Int>& b) {
    int da = int(a.size()) - 1, db = int(b.size()) - 1;
    std::vector<Int> q(da - db + 1, 0);
    for (int i = da; i >= db; --i) {
      Int c = a[i];  // b monic
      q[i - db] = c;
      for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    return q;
  }
  El zero() const { return El(deg, Rat(0)); }
  El from(const Rat& r) const {
    El e = zero();
    e[0] = r;
    return e;
  }
  El power(long k) const {
    std::vector<Rat> v(std::max<long>(mod(k, n) + 1, 1), Rat(0));
    v[mod(k, n)] = 1;
    return reduce(v);
  }
  El reduce(std::vector<Rat> v) const {
    for (int i = int(v.size()) - 1; i >= deg; --i) {
      if (sgn(v[i]) == 0) continue;
      Rat c = v[i];
      for (int j = 0; j <= deg; ++j) v[i - deg + j] -= c * Rat(phi[j]);
    }
    v.resize(deg, Rat(0));
    return v;
  }
  El add(const El& a, const El& b) const {
    El c(deg);
    for (int i = 0; i < deg; ++i) c[i] = a[i] + b[i];
    return c;
  }
  El sub(const El& a, const El& b) const {
    El c(deg);
    for (int i = 0; i < deg; ++i) c[i] = a[i] - b[i];
    return c;
  }
  El mul(const El& a, const El& b) const {
    std::vector<Rat> v(2 * deg, Rat(0));
    for (int i = 0; i < deg; ++i)
      if (sgn(a[i]) != 0)
        for (int j = 0; j < deg; ++j) v[i + j] += a[i] * b[j];
    return reduce(v);
  }
  El conj(const El& a) const {
    El c = zero();
    for (int i = 0; i < deg; ++i)
      if (sgn(a[i]) != 0) c = add(c, mul(from(a[i]), power(-i)));
    return c;
  }
  bool is_zero(const El& a) const {
    return std::all_of(a.begin(), a.end(), [](const Rat& r) { return sgn(r) == 0; });
  }
  El inv(const El& a) const {
    // solve (multiplication by a) y = 1
    QMat M(deg, deg);
    for (int j = 0; j < deg; ++j) {
      El col = mul(a, power(j));
      for (int i = 0; i < deg; ++i) M(i, j) = col[i];
    }
    QVec one(deg, Rat(0));
    one[0] = 1;
    auto y = solve_q(M, one);
    if (!y) throw Inconsistency("inverting zero in the cyclotomic field");
    return *y;
  }
  // sign of a real element under zeta -> exp(2 pi i / n)
  int real_sign(const El& a) const {
    for (int bits = 48;; bits *= 2) {
      Rat lo = 0, hi = 0;
      for (int j = 0; j < deg; ++j) {
        if (sgn(a[j]) == 0) continue;
        auto [c0, c1] = cos_bounds(j, n, bits);
        if (sgn(a[j]) > 0) lo += a[j] * c0, hi += a[j] * c1;
        else lo += a[j] * c1, hi += a[j] * c0;
      }
      if (sgn(lo) > 0) return 1;
      if (sgn(hi) < 0) return -1;
      if (bits > 1 << 16) throw Inconsistency("could not certify the sign of a nonzero real number");
    }
  }
};

}  // namespace

int tl_signature(const IMat& L, long p, long k, SingularPolicy policy) {
  require(L.rows == L.cols, "Seifert matrix must be square");
  require(p >= 2, "p must be at least 2");
  require(k >= 1 && k <= p - 1, "index must satisfy 1 <= i <= p-1");
  int n = L.rows;
  if (n == 0) return 0;
  Cyclo K(p);
  using El = Cyclo::El;
  El w = K.power(k), one = K.from(1);
  El a = K.sub(one, w), b = K.conj(a);
  std::vector<std::vector<El>> H(n, std::vector<El>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      H[i][j] = K.add(K.mul(a, K.from(Rat(L(i, j)))), K.mul(b, K.from(Rat(L(j, i)))));
  std::vector<int> act(n);
  for (int i = 0; i < n; ++i) act[i] = i;
  int sig = 0;
  while (!act.empty()) {
    int piv = -1;
    for (int i : act)
      if (!K.is_zero(H[i][i])) {
        piv = i;
        break;
      }
    if (piv < 0) {
      int r = -1, s = -1;
      for (int i : act)
        for (int j : act)
          if (r < 0 && i != j && !K.is_zero(H[i][j])) r = i, s = j;
      if (r < 0) {
        if (policy == SingularPolicy::Error) throw SingularForm("Hermitian form is singular at this root of unity");
        break;
      }
      // e_r += lambda e_s with lambda = conj(H_rs): new diagonal 2 |H_rs|^2
      El lam = K.conj(H[r][s]), lamc = H[r][s];
      for (int j : act) H[j][r] = K.add(H[j][r], K.mul(H[j][s], lam));
      for (int j : act) H[r][j] = K.add(H[r][j], K.mul(lamc, H[s][j]));
      piv = r;
    }
    El d = H[piv][piv];
    sig += K.real_sign(d);
    act.erase(std::find(act.begin(), act.end(), piv));
    El dinv = K.inv(d);
    for (int r : act) {
      if (K.is_zero(H[r][piv])) continue;
      El f = K.mul(H[r][piv], dinv);
      for (int s : act) H[r][s] = K.sub(H[r][s], K.mul(f, H[piv][s]));
    }
  }
  return sig;
}

std::map<long, int> tl_signatures(const IMat& L, long p, SingularPolicy policy) {
  std::map<long, int> out;
  for (long k = 1; k <= p - 1; ++k) out[k] = tl_signature(L, p, k, policy);
  return out;
}

int tl_sum(const IMat& L, long p, SingularPolicy policy) {
  int s = 0;
  for (auto [k, v] : tl_signatures(L, p, policy)) s += v;
  return s;
}

}  // namespace dih
