#include "dihedral/dihedral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "dihedral/cover_complex.hpp"
#include "dihedral/errors.hpp"

namespace dih {

bool FoxColoring::nontrivial() const {
  return std::any_of(color.begin(), color.end(), [&](long c) { return c != color[0]; });
}

namespace {

void check_modulus(long p) {
  require(p >= 3 && p % 2 == 1, "p must be an odd integer >= 3");
  require(square_free(p), "p must be square-free");
}

std::vector<std::vector<int64_t>> coloring_rows(const KnotDiagram& d, long q, const std::vector<bool>& pseudo) {
  auto ps = [&](int a) { return !pseudo.empty() && pseudo[a]; };
  std::vector<std::vector<int64_t>> rows;
  for (auto& c : d.crossings) {
    std::vector<int64_t> r(d.arcs, 0);
    if (ps(c.under_in) && ps(c.under_out)) continue;
    if (ps(c.over)) {
      r[c.under_in] += 1;
      r[c.under_out] -= 1;
    } else {
      r[c.over] += 2;
      r[c.under_in] -= 1;
      r[c.under_out] -= 1;
    }
    for (auto& x : r) x = mod(x, q);
    rows.push_back(r);
  }
  for (int a = 0; a < d.arcs; ++a)
    if (ps(a)) {
      std::vector<int64_t> r(d.arcs, 0);
      r[a] = 1;
      rows.push_back(r);
    }
  return rows;
}

// all kernel vectors mod q
std::vector<std::vector<long>> kernel_elements(const KnotDiagram& d, long q, const std::vector<bool>& pseudo) {
  auto basis = kernel_mod_p(coloring_rows(d, q, pseudo), d.arcs, q);
  double count = std::pow(double(q), double(basis.size()));
  if (count > 2e6) throw InvalidInput("too many colorings to enumerate");
  std::vector<std::vector<long>> out{std::vector<long>(d.arcs, 0)};
  for (auto& b : basis) {
    std::vector<std::vector<long>> next;
    for (auto& v : out)
      for (long t = 0; t < q; ++t) {
        auto w = v;
        for (int a = 0; a < d.arcs; ++a) w[a] = (w[a] + t * b[a]) % q;
        next.push_back(w);
      }
    out.swap(next);
  }
  return out;
}

}  // namespace

std::vector<FoxColoring> fox_colorings(const KnotDiagram& d, long p, const std::vector<bool>& pseudo) {
  check_modulus(p);
  validate(d);
  require(pseudo.empty() || int(pseudo.size()) == d.arcs, "pseudo mask length must equal arc count");
  std::vector<std::vector<long>> acc{std::vector<long>(d.arcs, 0)};
  long m = 1;
  for (long q : prime_factors(p)) {
    auto ker = kernel_elements(d, q, pseudo);
    std::vector<std::vector<long>> next;
    // CRT: x = x_m + m * t with x = k (mod q)
    long minv = inv_mod(m % q, q);
    for (auto& x : acc)
      for (auto& k : ker) {
        std::vector<long> y(d.arcs);
        for (int a = 0; a < d.arcs; ++a) {
          long t = mod((k[a] - x[a]) % q * minv, q);
          y[a] = x[a] + m * t;
        }
        next.push_back(y);
      }
    acc.swap(next);
    m *= q;
  }
  std::sort(acc.begin(), acc.end());
  std::vector<FoxColoring> out;
  for (auto& c : acc) out.push_back({p, c});
  return out;
}

int coloring_nullity(const KnotDiagram& d, long p, const std::vector<bool>& pseudo) {
  require(is_prime(p) && p % 2 == 1, "nullity needs an odd prime");
  return d.arcs - rank_mod_p(coloring_rows(d, p, pseudo), d.arcs, p);
}

std::vector<ColoringOrbit> coloring_orbits(const std::vector<FoxColoring>& cs) {
  std::map<std::vector<long>, long> orb;
  for (auto& c : cs) {
    if (!c.nontrivial()) continue;
    long p = c.p;
    std::vector<long> best;
    for (long u = 1; u < p; ++u) {
      if (std::gcd(u, p) != 1) continue;
      for (long v = 0; v < p; ++v) {
        std::vector<long> w(c.color.size());
        for (size_t a = 0; a < w.size(); ++a) w[a] = (u * c.color[a] + v) % p;
        if (best.empty() || w < best) best = w;
      }
    }
    ++orb[best];
  }
  std::vector<ColoringOrbit> out;
  for (auto& [rep, n] : orb) out.push_back({rep, n});
  return out;
}

bool admits_dihedral_cover(const KnotDiagram& d, long p) {
  check_modulus(p);
  // surjectivity onto D_p needs a nontrivial coloring modulo every prime factor
  for (long q : prime_factors(p))
    if (coloring_nullity(d, q) < 2) return false;
  return true;
}

namespace {

// polynomial through (x_i, y_i) by Newton divided differences
std::vector<Rat> interpolate(const std::vector<Rat>& x, const std::vector<Rat>& y) {
  int n = int(x.size());
  std::vector<Rat> c = y;
  for (int j = 1; j < n; ++j)
    for (int i = n - 1; i >= j; --i) c[i] = (c[i] - c[i - 1]) / (x[i] - x[i - j]);
  std::vector<Rat> p(n, Rat(0));
  for (int i = n - 1; i >= 0; --i) {
    // p = p * (t - x_i) + c_i
    std::vector<Rat> q(n, Rat(0));
    for (int k = 0; k + 1 < n; ++k) {
      q[k + 1] += p[k];
      q[k] -= p[k] * x[i];
    }
    q[0] += c[i];
    p.swap(q);
  }
  return p;
}

std::vector<Int> normalize_alexander(const std::vector<Rat>& p) {
  std::vector<Int> c;
  for (auto& x : p) {
    if (x.get_den() != 1) throw Inconsistency("Alexander polynomial has a non-integer coefficient");
    c.push_back(x.get_num());
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
  size_t lo = 0;
  while (lo < c.size() && c[lo] == 0) ++lo;
  c.erase(c.begin(), c.begin() + long(lo));
  if (c.empty()) throw Inconsistency("Alexander polynomial vanishes");
  Int at1 = 0;
  for (auto& x : c) at1 += x;
  if (abs(at1) != 1) throw Inconsistency("Alexander polynomial has |Delta(1)| != 1");
  if (at1 < 0)
    for (auto& x : c) x = -x;
  return c;
}

}  // namespace

std::vector<Int> alexander_polynomial(const KnotDiagram& d) {
  require(components(d).size() == 1, "Alexander polynomial needs a knot");
  if (d.crossings.size() <= 1) return {Int(1)};
  auto P = wirtinger(d);
  int n = d.arcs, m = int(P.relators.size());
  // Fox derivatives as exponent -> coefficient, rows shifted to start at t^0
  std::vector<std::vector<std::map<int, long>>> F(m, std::vector<std::map<int, long>>(n));
  int deg = 0;
  for (int i = 0; i < m - 1; ++i) {
    int e = 0, lo = 0, hi = 0;
    for (auto [g, s] : P.relators[i]) {
      if (s > 0) F[i][g][e] += 1, ++e;
      else --e, F[i][g][e] -= 1;
      lo = std::min(lo, e), hi = std::max(hi, e);
    }
    for (auto& entry : F[i]) {
      std::map<int, long> shifted;
      for (auto [k, v] : entry)
        if (v) shifted[k - lo] = v;
      entry.swap(shifted);
    }
    deg += hi - lo;
  }
  std::vector<Rat> xs, ys;
  for (int s = 0; s <= deg; ++s) {
    Int t = s + 2;
    IMat M(n - 1, n - 1);
    for (int i = 0; i < n - 1; ++i)
      for (int j = 0; j < n - 1; ++j) {
        Int v = 0, pw = 1;
        int last = 0;
        for (auto [k, c] : F[i][j]) {
          for (; last < k; ++last) pw *= t;
          v += Int(c) * pw;
        }
        M(i, j) = v;
      }
    xs.push_back(Rat(t));
    ys.push_back(Rat(det(M)));
  }
  return normalize_alexander(interpolate(xs, ys));
}

std::vector<Int> alexander_polynomial(const IMat& L) {
  require(L.rows == L.cols, "Seifert matrix must be square");
  int n = L.rows;
  if (n == 0) return {Int(1)};
  std::vector<Rat> xs, ys;
  for (int s = 0; s <= n; ++s) {
    Int t = s + 2;
    IMat M(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) M(i, j) = L(i, j) - t * L(j, i);
    xs.push_back(Rat(t));
    ys.push_back(Rat(det(M)));
  }
  return normalize_alexander(interpolate(xs, ys));
}

Int determinant(const KnotDiagram& d, const std::optional<IMat>& seifert) {
  auto cc = lift(d, two_fold_rep(d));
  auto H = cover_homology(cc, 1);
  Int viaCover = 0;
  if (H.free_rank == 0) {
    viaCover = 1;
    for (auto& t : H.torsion) viaCover *= t;
  }
  if (!seifert) return viaCover;
  Int viaSeifert = abs(det(add(*seifert, seifert->transpose())));
  if (viaSeifert != viaCover)
    throw Inconsistency("determinant mismatch: Seifert " + viaSeifert.get_str() + ", cover " + viaCover.get_str());
  return viaSeifert;
}

std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> h(g.size());
  for (size_t x = 0; x < g.size(); ++x) h[x] = f[g[x]];
  return h;
}

std::vector<int> inverse(const std::vector<int>& f) {
  std::vector<int> h(f.size());
  for (size_t x = 0; x < f.size(); ++x) h[f[x]] = int(x);
  return h;
}

std::vector<int> cycle_type(const std::vector<int>& perm) {
  std::vector<int> seen(perm.size(), 0), out;
  for (size_t x = 0; x < perm.size(); ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (size_t y = x; !seen[y]; y = perm[y]) seen[y] = 1, ++len;
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

PermRep coloring_to_rep(const FoxColoring& c, const std::vector<bool>& pseudo) {
  require(c.nontrivial(), "trivial coloring does not give a surjective representation");
  int p = int(c.p);
  PermRep r{p, {}};
  for (size_t a = 0; a < c.color.size(); ++a) {
    std::vector<int> s(p);
    for (int x = 0; x < p; ++x) s[x] = (!pseudo.empty() && pseudo[a]) ? x : int(mod(2 * c.color[a] - x, p));
    r.perm.push_back(s);
  }
  return r;
}

PermRep two_fold_rep(const KnotDiagram& d) { return {2, std::vector<std::vector<int>>(d.arcs, {1, 0})}; }

PermRep trivial_rep(const KnotDiagram& d, int degree) {
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  return {degree, std::vector<std::vector<int>>(d.arcs, id)};
}

void check_rep(const KnotDiagram& d, const PermRep& r) {
  validate(d);
  require(int(r.perm.size()) == d.arcs, "representation needs one permutation per arc");
  for (auto& s : r.perm) {
    require(int(s.size()) == r.degree, "permutation of wrong degree");
    auto t = s;
    std::sort(t.begin(), t.end());
    for (int x = 0; x < r.degree; ++x) require(t[x] == x, "not a permutation");
  }
  for (auto& c : d.crossings) {
    auto& o = r.perm[c.over];
    auto expect = c.sign > 0 ? compose(inverse(o), compose(r.perm[c.under_in], o))
                             : compose(o, compose(r.perm[c.under_in], inverse(o)));
    if (expect != r.perm[c.under_out]) throw Inconsistency("representation violates a crossing relation");
  }
}

bool transitive(const PermRep& r) {
  std::vector<int> seen(r.degree, 0), stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (auto& s : r.perm)
      if (!seen[s[x]]) seen[s[x]] = 1, stack.push_back(s[x]);
  }
  return std::all_of(seen.begin(), seen.end(), [](int v) { return v; });
}

}  // namespace dih
