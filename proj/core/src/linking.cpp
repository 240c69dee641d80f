#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "dihedral/cover_complex.hpp"
#include "dihedral/errors.hpp"

namespace dih {

namespace {

using Row = std::vector<std::pair<int, Rat>>;  // sorted by column

// r -= f * p over sorted rows
void axpy(Row& r, const Rat& f, const Row& p) {
  Row out;
  out.reserve(r.size() + p.size());
  size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.push_back(std::move(r[i++]));
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.push_back({p[j].first, -f * p[j].second});
      ++j;
    } else {
      Rat v = r[i].second - f * p[j].second;
      if (sgn(v) != 0) out.push_back({r[i].first, v});
      ++i, ++j;
    }
  }
  r.swap(out);
}

const Rat* find_col(const Row& r, int c) {
  auto it = std::lower_bound(r.begin(), r.end(), c, [](auto& e, int x) { return e.first < x; });
  return it != r.end() && it->first == c ? &it->second : nullptr;
}

}  // namespace

// Sparse Gaussian elimination with a Markowitz-style pivot choice.
QVec bounding_chain(const CellComplex& cc, const QVec& cycle, unsigned seed) {
  const SparseMat& D = cc.d[2];
  int m = D.rows, n = D.cols;
  require(int(cycle.size()) == m, "cycle has wrong length");
  std::vector<int> cperm(n);
  std::iota(cperm.begin(), cperm.end(), 0);
  if (seed) std::shuffle(cperm.begin(), cperm.end(), std::mt19937(seed));
  // column c of D becomes variable cperm[c]
  std::vector<Row> rows(m);
  for (int c = 0; c < n; ++c)
    for (auto [r, v] : D.col[c]) rows[r].push_back({cperm[c], Rat(v)});
  for (auto& r : rows) std::sort(r.begin(), r.end(), [](auto& x, auto& y) { return x.first < y.first; });
  std::vector<Rat> rhs(cycle.begin(), cycle.end());
  std::vector<std::set<int>> colrows(n);
  for (int r = 0; r < m; ++r)
    for (auto& e : rows[r]) colrows[e.first].insert(r);

  std::set<std::pair<size_t, int>> active;  // (size, row)
  for (int r = 0; r < m; ++r) active.insert({rows[r].size(), r});
  std::vector<std::pair<int, int>> pivots;  // (row, col)
  while (!active.empty()) {
    auto [sz, r] = *active.begin();
    active.erase(active.begin());
    if (sz == 0) {
      if (sgn(rhs[r]) != 0) throw NotNullhomologous("cycle does not bound over Q");
      continue;
    }
    int pc = -1;
    size_t best = SIZE_MAX;
    for (auto& e : rows[r])
      if (colrows[e.first].size() < best) best = colrows[e.first].size(), pc = e.first;
    Rat piv = *find_col(rows[r], pc);
    for (auto& e : rows[r]) colrows[e.first].erase(r);
    std::vector<int> targets(colrows[pc].begin(), colrows[pc].end());
    for (int t : targets) {
      active.erase({rows[t].size(), t});
      for (auto& e : rows[t]) colrows[e.first].erase(t);
      Rat f = *find_col(rows[t], pc) / piv;
      axpy(rows[t], f, rows[r]);
      rhs[t] -= f * rhs[r];
      for (auto& e : rows[t]) colrows[e.first].insert(t);
      active.insert({rows[t].size(), t});
    }
    pivots.push_back({r, pc});
  }
  QVec y(n, Rat(0));
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    auto [r, c] = *it;
    Rat s = rhs[r], piv;
    for (auto& e : rows[r]) {
      if (e.first == c) piv = e.second;
      else s -= e.second * y[e.first];
    }
    y[c] = s / piv;
  }
  QVec x(n);
  for (int c = 0; c < n; ++c) x[c] = y[cperm[c]];
  // certificate check
  QVec b(m, Rat(0));
  for (int c = 0; c < n; ++c)
    if (sgn(x[c]) != 0)
      for (auto [r, v] : D.col[c]) b[r] += v * x[c];
  if (b != cycle) throw Inconsistency("bounding chain failed verification");
  return x;
}

Rat intersect_pushoff(const CoverComplex& cc, const CurveCombo& a, const QVec& x) {
  const auto& d = cc.diagram;
  auto ends = arc_ends(d);
  Rat total = 0;
  for (auto [id, coef] : a) {
    require(id >= 0 && id < int(cc.curves.size()), "unknown curve");
    auto& cur = cc.curves[id];
    Rat s = 0;
    for (auto [arc, k] : cur.pushoff) {
      auto& c = d.crossings[ends[arc].end];
      if (c.sign > 0) s += x[cc.curtain[c.over][inverse(cc.rep.perm[c.over])[k]]];
      else s -= x[cc.curtain[c.over][k]];
    }
    total += coef * s / cur.index;
  }
  return total;
}

namespace {

QVec combo_chain(const CoverComplex& cc, const CurveCombo& b) {
  QVec v(cc.cells[1], Rat(0));
  for (auto [id, coef] : b) {
    require(id >= 0 && id < int(cc.curves.size()), "unknown curve");
    for (int e : cc.curves[id].arcs) v[e] += coef;
  }
  return v;
}

}  // namespace

LinkingResult linking(const CoverComplex& cc, const CurveCombo& a, const CurveCombo& b, unsigned seed) {
  for (auto& x : a)
    for (auto& y : b)
      require(x.first != y.first, "linking needs disjoint cycles; push one off first");
  LinkingResult r;
  r.certificate = bounding_chain(cc, combo_chain(cc, b), seed);
  r.value = intersect_pushoff(cc, a, r.certificate);
  return r;
}

int self_writhe(const KnotDiagram& d, int component) {
  std::vector<int> comp;
  components(d, &comp);
  int w = 0;
  for (auto& c : d.crossings)
    if (comp[c.over] == component && comp[c.under_in] == component) w += c.sign;
  return w;
}

Rat self_linking(const CoverComplex& cc, const CurveCombo& a, const std::vector<int>& framing, unsigned seed) {
  for (auto [id, coef] : a) {
    require(id >= 0 && id < int(cc.curves.size()), "unknown curve");
    if (cc.curves[id].index != 1) throw InvalidInput("surface framing is only defined on index-1 lifts");
  }
  QVec x = bounding_chain(cc, combo_chain(cc, a), seed);
  Rat v = intersect_pushoff(cc, a, x);
  std::map<int, long> sq;
  for (auto [id, coef] : a) sq[id] += coef;
  for (auto [id, coef] : sq) {
    int comp = cc.curves[id].component;
    require(comp < int(framing.size()), "missing framing for a component");
    v += Rat(coef * coef * (framing[comp] - self_writhe(cc.diagram, comp)));
  }
  return v;
}

}  // namespace dih
