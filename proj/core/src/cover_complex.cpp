#include "dihedral/cover_complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "dihedral/errors.hpp"

namespace dih {

void SparseMat::add(int r, int c, long v) {
  if (v) col[c].push_back({r, v});
}

void SparseMat::normalize() {
  for (auto& cl : col) {
    std::sort(cl.begin(), cl.end());
    std::vector<std::pair<int, long>> out;
    for (auto& e : cl) {
      if (!out.empty() && out.back().first == e.first) out.back().second += e.second;
      else out.push_back(e);
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](auto& e) { return e.second == 0; }), out.end());
    cl.swap(out);
  }
}

IMat SparseMat::dense() const {
  IMat M(rows, cols);
  for (int c = 0; c < cols; ++c)
    for (auto [r, v] : col[c]) M(r, c) += v;
  return M;
}

long SparseMat::nnz() const {
  long n = 0;
  for (auto& c : col) n += long(c.size());
  return n;
}

bool product_is_zero(const SparseMat& A, const SparseMat& B) {
  require(A.cols == B.rows, "dimension mismatch in product");
  std::vector<long> acc(A.rows, 0);
  for (int c = 0; c < B.cols; ++c) {
    std::vector<int> touched;
    for (auto [k, v] : B.col[c])
      for (auto [r, w] : A.col[k]) {
        acc[r] += v * w;
        touched.push_back(r);
      }
    for (int r : touched) {
      if (acc[r]) return false;
    }
  }
  return true;
}

QVec LiftedCurve::chain(int n1) const {
  QVec v(n1, Rat(0));
  for (int a : arcs) v[a] += 1;
  return v;
}

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

// orbit representative (least element) of each point under a permutation
std::vector<int> orbit_min(const std::vector<int>& s) {
  std::vector<int> m(s.size(), -1);
  for (size_t x = 0; x < s.size(); ++x) {
    if (m[x] >= 0) continue;
    std::vector<int> cyc;
    for (int y = int(x); m[y] < 0; y = s[y]) m[y] = 0, cyc.push_back(y);
    int lo = *std::min_element(cyc.begin(), cyc.end());
    for (int y : cyc) m[y] = lo;
  }
  return m;
}

KnotDiagram prepare(const KnotDiagram& d0, PermRep& rep) {
  validate(d0);
  check_rep(d0, rep);
  KnotDiagram d = d0;
  if (d.crossings.empty()) {
    require(d.arcs == 1, "crossing-free diagrams with several circles are split");
    auto sheet = rep.perm[0];
    d = kinked_unknot(1);
    rep.perm = {sheet};
  }
  if (d.over_order.empty()) {
    require(has_over_order(d), "diagram needs over_order: some arc passes over several crossings");
    d.over_order.assign(d.arcs, {});
    for (int j = 0; j < int(d.crossings.size()); ++j) d.over_order[d.crossings[j].over].push_back(j);
  }
  std::vector<int> comp;
  auto comps = components(d, &comp);
  UnionFind uf(int(comps.size()));
  for (auto& c : d.crossings) uf.unite(comp[c.over], comp[c.under_in]);
  for (int c = 0; c < int(comps.size()); ++c)
    require(uf.find(c) == uf.find(0), "split diagrams are not supported");
  return d;
}

}  // namespace

CoverComplex lift(const KnotDiagram& d0, const PermRep& rep0) {
  CoverComplex cc;
  cc.rep = rep0;
  cc.diagram = prepare(d0, cc.rep);
  const auto& d = cc.diagram;
  const auto& mu = cc.rep.perm;
  int n = cc.rep.degree, A = d.arcs, X = int(d.crossings.size());
  cc.sheets = n;
  auto ends = arc_ends(d);

  std::vector<std::vector<int>> mu_inv(A);
  for (int a = 0; a < A; ++a) mu_inv[a] = inverse(mu[a]);
  // meridian at the undercrossing point, its inverse, and NE conversions
  std::vector<std::vector<int>> nu(X), nu_inv(X);
  for (int j = 0; j < X; ++j) {
    auto& c = d.crossings[j];
    nu[j] = c.sign > 0 ? mu_inv[c.under_out] : mu[c.under_in];
    nu_inv[j] = inverse(nu[j]);
  }
  // NE sheet at the arc's end (as under_in) and start (as under_out), from its left sheet
  auto ne_end = [&](int a, int k) {
    int j = ends[a].end;
    auto& c = d.crossings[j];
    return c.sign > 0 ? nu_inv[j][mu_inv[c.over][k]] : k;
  };
  auto ne_start = [&](int a, int k) {
    int j = ends[a].start;
    auto& c = d.crossings[j];
    return c.sign > 0 ? nu_inv[j][k] : mu_inv[c.over][k];
  };

  auto& L = cc.labels;
  // 1-cells: arc lifts per orbit, then cone edges per sheet
  cc.arc_cell.assign(A, std::vector<int>(n));
  int n1 = 0;
  for (int a = 0; a < A; ++a) {
    auto om = orbit_min(mu[a]);
    std::map<int, int> id;
    for (int k = 0; k < n; ++k) {
      auto it = id.find(om[k]);
      if (it == id.end()) {
        it = id.emplace(om[k], n1++).first;
        L[1].push_back("arc" + std::to_string(a) + "." + std::to_string(om[k]));
      }
      cc.arc_cell[a][k] = it->second;
    }
  }
  cc.r_cell.assign(X, std::vector<int>(n));
  for (int j = 0; j < X; ++j)
    for (int m = 0; m < n; ++m) {
      cc.r_cell[j][m] = n1++;
      L[1].push_back("cone" + std::to_string(j) + "." + std::to_string(m));
    }

  // lifts of the cone point: cone-edge lifts meeting at P inside one curtain piece
  UnionFind pu(X * n);
  auto rid = [&](int j, int m) { return j * n + m; };
  for (int a = 0; a < A; ++a)
    for (int k = 0; k < n; ++k) {
      int prev = rid(ends[a].end, ne_end(a, k));
      auto& ov = d.over_order[a];
      for (int t = int(ov.size()) - 1; t >= 0; --t) {
        int j = ov[t];
        pu.unite(prev, rid(j, k));
        prev = rid(j, nu_inv[j][k]);
      }
      pu.unite(prev, rid(ends[a].start, ne_start(a, k)));
    }
  std::map<int, int> pid;
  for (int x = 0; x < X * n; ++x) pid.emplace(pu.find(x), int(pid.size()));
  if (int(pid.size()) != n)
    throw Inconsistency("cone point has " + std::to_string(pid.size()) + " lifts, expected " + std::to_string(n));
  // renumber P-lifts by the first cone edge reaching them
  std::map<int, int> porder;
  for (int x = 0; x < X * n; ++x) porder.emplace(pu.find(x), int(porder.size()));

  // 0-cells: P lifts, then undercrossing points per meridian orbit
  int n0 = 0;
  cc.p_cell.resize(n);
  for (int i = 0; i < n; ++i) {
    cc.p_cell[i] = n0++;
    L[0].push_back("P." + std::to_string(i));
  }
  cc.u_cell.assign(X, std::vector<int>(n));
  for (int j = 0; j < X; ++j) {
    auto om = orbit_min(nu[j]);
    std::map<int, int> id;
    for (int m = 0; m < n; ++m) {
      auto it = id.find(om[m]);
      if (it == id.end()) {
        it = id.emplace(om[m], n0++).first;
        L[0].push_back("U" + std::to_string(j) + "." + std::to_string(om[m]));
      }
      cc.u_cell[j][m] = it->second;
    }
  }

  cc.curtain.assign(A, std::vector<int>(n));
  int n2 = 0;
  for (int a = 0; a < A; ++a)
    for (int k = 0; k < n; ++k) {
      cc.curtain[a][k] = n2++;
      L[2].push_back("curtain" + std::to_string(a) + "." + std::to_string(k));
    }
  cc.e_cell.resize(n);
  for (int k = 0; k < n; ++k) {
    cc.e_cell[k] = k;
    L[3].push_back("ball." + std::to_string(k));
  }
  cc.cells = {n0, n1, n2, n};

  SparseMat d1(n0, n1), d2(n1, n2), d3(n2, n);
  for (int a = 0; a < A; ++a) {
    std::vector<int> done(n1, 0);
    for (int k = 0; k < n; ++k) {
      int c = cc.arc_cell[a][k];
      int hi = cc.u_cell[ends[a].end][ne_end(a, k)], lo = cc.u_cell[ends[a].start][ne_start(a, k)];
      if (!done[c]) {
        d1.add(hi, c, 1);
        d1.add(lo, c, -1);
        done[c] = 1 + hi * n0 + lo;
      } else if (done[c] != 1 + hi * n0 + lo) {
        throw Inconsistency("arc lift endpoints depend on the sheet");
      }
    }
  }
  for (int j = 0; j < X; ++j)
    for (int m = 0; m < n; ++m) {
      d1.add(cc.p_cell[porder[pu.find(rid(j, m))]], cc.r_cell[j][m], 1);
      d1.add(cc.u_cell[j][m], cc.r_cell[j][m], -1);
    }
  for (int a = 0; a < A; ++a)
    for (int k = 0; k < n; ++k) {
      int c = cc.curtain[a][k];
      d2.add(cc.arc_cell[a][k], c, 1);
      d2.add(cc.r_cell[ends[a].end][ne_end(a, k)], c, 1);
      d2.add(cc.r_cell[ends[a].start][ne_start(a, k)], c, -1);
      for (int j : d.over_order[a]) {
        d2.add(cc.r_cell[j][nu_inv[j][k]], c, 1);
        d2.add(cc.r_cell[j][k], c, -1);
      }
    }
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < A; ++a) {
      d3.add(cc.curtain[a][mu_inv[a][k]], k, 1);
      d3.add(cc.curtain[a][k], k, -1);
    }
  d1.normalize(), d2.normalize(), d3.normalize();
  if (!product_is_zero(d1, d2) || !product_is_zero(d2, d3)) throw Inconsistency("lifted boundary does not square to zero");
  cc.d[1] = std::move(d1), cc.d[2] = std::move(d2), cc.d[3] = std::move(d3);
  cc.d[0] = SparseMat(0, n0);

  // lifted curves: follow each component, carrying the left sheet under each crossing
  std::vector<int> comp_of;
  auto comps = components(d, &comp_of);
  std::vector<std::vector<char>> used(A, std::vector<char>(n, 0));
  for (int ci = 0; ci < int(comps.size()); ++ci) {
    int a0 = comps[ci][0];
    for (int k0 = 0; k0 < n; ++k0) {
      if (used[a0][k0]) continue;
      LiftedCurve cur;
      cur.component = ci;
      // all sheets of the orbits met by this curve
      std::vector<int> frontier;
      auto om = orbit_min(mu[a0]);
      for (int k = 0; k < n; ++k)
        if (om[k] == om[k0]) frontier.push_back(k);
      cur.index = int(frontier.size());
      std::vector<char> seen_cell(n1, 0);
      for (int k : frontier) {
        int a = a0, s = k;
        do {
          if (used[a][s]) break;
          used[a][s] = 1;
          cur.pushoff.push_back({a, s});
          int cell = cc.arc_cell[a][s];
          if (!seen_cell[cell]) seen_cell[cell] = 1, cur.arcs.push_back(cell);
          auto& c = d.crossings[ends[a].end];
          s = c.sign > 0 ? mu_inv[c.over][s] : mu[c.over][s];
          a = c.under_out;
        } while (!(a == a0 && s == k));
      }
      cc.curves.push_back(cur);
    }
  }
  return cc;
}

CellComplex base_complex(const KnotDiagram& d) {
  CoverComplex cc = lift(d, trivial_rep(d, 1));
  return static_cast<CellComplex&>(cc);
}

Homology cover_homology(const CellComplex& cc, int dim) {
  require(dim >= 0 && dim <= 3, "homology dimension must be 0..3");
  IMat out = dim == 0 ? IMat(0, cc.cells[0]) : cc.d[dim].dense();
  IMat in = dim == 3 ? IMat(cc.cells[3], 0) : cc.d[dim + 1].dense();
  return homology(out, in, cc.cells[dim]);
}

const std::vector<LiftedCurve>& branch_curves(const CoverComplex& cc) { return cc.curves; }

}  // namespace dih
