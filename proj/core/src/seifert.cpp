#include "dihedral/seifert.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "dihedral/errors.hpp"

namespace dih {

SeifertData seifert_matrix_C(const std::vector<int>& e) {
  require(!e.empty() && e.size() % 2 == 0, "twist vector must have even length");
  int n = int(e.size());
  SeifertData s{IMat(n, n), n / 2, {}};
  for (int i = 0; i < n; ++i) {
    require(e[i] != 0, "twist counts must be nonzero");
    require(e[i] % 2 == 0, "the plumbed surface needs even twist counts");
    s.L(i, i) = (i % 2 == 0 ? -e[i] : e[i]) / 2;
    if (i + 1 < n) s.L(i, i + 1) = i % 2 == 0 ? 1 : -1;
    s.basis_labels.push_back("w" + std::to_string(i + 1));
  }
  return s;
}

IMat symmetrize(const IMat& L) {
  require(L.rows == L.cols, "Seifert matrix must be square");
  return add(L, L.transpose());
}

namespace {

std::vector<long> canonical_line(std::vector<long> v, long p) {
  std::vector<long> best;
  for (long u = 1; u < p; ++u) {
    if (std::gcd(u, p) != 1) continue;
    std::vector<long> w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = (u * v[i]) % p;
    if (best.empty() || w < best) best = w;
  }
  return best;
}

}  // namespace

bool is_characteristic(const IMat& LV, const HomologyClass& b, long p) {
  require(int(b.size()) == LV.cols, "class has wrong length");
  bool nz = false;
  for (long x : b) nz = nz || mod(x, p) != 0;
  if (!nz) return false;
  for (int i = 0; i < LV.rows; ++i) {
    Int s = 0;
    for (int j = 0; j < LV.cols; ++j) s += LV(i, j) * Int(b[j]);
    Int r = s % Int(p);
    if (r != 0) return false;
  }
  return true;
}

bool same_class_mod(const HomologyClass& b, const HomologyClass& c, long p) {
  if (b.size() != c.size()) return false;
  std::vector<long> x(b.size()), y(c.size());
  for (size_t i = 0; i < b.size(); ++i) x[i] = mod(b[i], p), y[i] = mod(c[i], p);
  return canonical_line(x, p) == canonical_line(y, p);
}

std::vector<HomologyClass> characteristic_classes(const IMat& LV, long p) {
  require(LV.rows == LV.cols, "form must be square");
  require(LV == LV.transpose(), "form must be symmetric");
  require(p >= 3 && p % 2 == 1 && square_free(p), "p must be odd and square-free");
  int n = LV.rows;
  // kernel elements per prime, combined by CRT
  std::vector<std::vector<long>> acc{std::vector<long>(n, 0)};
  long m = 1;
  for (long q : prime_factors(p)) {
    std::vector<std::vector<int64_t>> rows(n, std::vector<int64_t>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rows[i][j] = Int(LV(i, j) % Int(q)).get_si();
    auto basis = kernel_mod_p(rows, n, q);
    require(std::pow(double(q), double(basis.size())) < 2e6, "kernel too large to enumerate");
    std::vector<std::vector<long>> ker{std::vector<long>(n, 0)};
    for (auto& b : basis) {
      std::vector<std::vector<long>> next;
      for (auto& v : ker)
        for (long t = 0; t < q; ++t) {
          auto w = v;
          for (int i = 0; i < n; ++i) w[i] = (w[i] + t * b[i]) % q;
          next.push_back(w);
        }
      ker.swap(next);
    }
    std::vector<std::vector<long>> next;
    long minv = inv_mod(m % q, q);
    for (auto& x : acc)
      for (auto& k : ker) {
        std::vector<long> y(n);
        for (int i = 0; i < n; ++i) y[i] = x[i] + m * mod((k[i] - x[i]) % q * minv, q);
        next.push_back(y);
      }
    acc.swap(next);
    m *= q;
  }
  std::set<std::vector<long>> lines;
  for (auto& v : acc)
    if (std::any_of(v.begin(), v.end(), [](long x) { return x != 0; })) lines.insert(canonical_line(v, p));
  std::vector<HomologyClass> out;
  for (auto v : lines) {
    for (auto& x : v)
      if (2 * x > p) x -= p;
    out.push_back(v);
  }
  return out;
}

Int quad_form(const IMat& LV, const HomologyClass& b) {
  require(LV.rows == int(b.size()) && LV.cols == int(b.size()), "class has wrong length");
  Int s = 0;
  for (int i = 0; i < LV.rows; ++i)
    for (int j = 0; j < LV.cols; ++j) s += Int(b[i]) * LV(i, j) * Int(b[j]);
  return s;
}

}  // namespace dih
