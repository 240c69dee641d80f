#pragma once
// Reference computations that share no code path with the cone complex.
#include <map>
#include <set>

#include "dihedral/errors.hpp"

#include "dihedral/cover_complex.hpp"
#include "dihedral/diagram.hpp"

namespace oracle {
using namespace dih;

// Linking matrix of the lifted curves of cc, from the lifted Wirtinger
// presentation complex: the lifted blackboard push-off of curve c is written
// as sum_d a_d (meridian of d) + boundary, and lk(c, d) = a_d / index(c).
// Diagonal entries are blackboard self-linkings.
inline QMat presentation_linking(const CoverComplex& cc) {
  const auto& d = cc.diagram;
  const auto& mu = cc.rep.perm;
  int n = cc.rep.degree, A = d.arcs, X = int(d.crossings.size());
  auto edge = [&](int g, int s) { return g * n + s; };
  int E = A * n;
  // relator lifts
  std::vector<QVec> rel;
  auto inv = [&](const std::vector<int>& f) {
    std::vector<int> h(f.size());
    for (size_t x = 0; x < f.size(); ++x) h[f[x]] = int(x);
    return h;
  };
  auto word_chain = [&](const std::vector<std::pair<int, int>>& w, int s, QVec& v) {
    for (auto [g, e] : w) {
      if (e > 0) {
        v[edge(g, s)] += 1;
        s = mu[g][s];
      } else {
        s = inv(mu[g])[s];
        v[edge(g, s)] -= 1;
      }
    }
    return s;
  };
  for (int j = 0; j < X; ++j) {
    auto& c = d.crossings[j];
    std::vector<std::pair<int, int>> w;
    if (c.sign > 0) w = {{c.over, 1}, {c.under_in, -1}, {c.over, -1}, {c.under_out, 1}};
    else w = {{c.over, 1}, {c.under_out, 1}, {c.over, -1}, {c.under_in, -1}};
    for (int s = 0; s < n; ++s) {
      QVec v(E, Rat(0));
      if (word_chain(w, s, v) != s) throw Inconsistency("oracle: relator does not close");
      rel.push_back(v);
    }
  }
  // curves: orbit of the first piece, walked around the component
  std::vector<int> ends_at(A);
  for (int j = 0; j < X; ++j) ends_at[d.crossings[j].under_in] = j;
  int C = int(cc.curves.size());
  std::vector<QVec> meridian(C, QVec(E, Rat(0))), longitude(C, QVec(E, Rat(0)));
  std::vector<int> index(C);
  for (int ci = 0; ci < C; ++ci) {
    auto [a0, k0] = cc.curves[ci].pushoff[0];
    std::vector<int> orbit{k0};
    for (int s = mu[a0][k0]; s != k0; s = mu[a0][s]) orbit.push_back(s);
    index[ci] = int(orbit.size());
    for (int k : orbit) meridian[ci][edge(a0, k)] += 1;
    std::set<std::pair<int, int>> seen;
    for (int k : orbit) {
      int a = a0, s = k;
      while (seen.insert({a, s}).second) {
        auto& c = d.crossings[ends_at[a]];
        // passing under the over arc: x_o^{-sign}
        s = word_chain({{c.over, -c.sign}}, s, longitude[ci]);
        a = c.under_out;
      }
    }
  }
  QMat L(C, C);
  int R = int(rel.size());
  QMat M(E, C + R);
  for (int e = 0; e < E; ++e) {
    for (int c = 0; c < C; ++c) M(e, c) = meridian[c][e];
    for (int r = 0; r < R; ++r) M(e, C + r) = rel[r][e];
  }
  for (int ci = 0; ci < C; ++ci) {
    auto sol = solve_q(M, longitude[ci]);
    if (!sol) throw NotNullhomologous("oracle: longitude not in the meridian span");
    for (int c = 0; c < C; ++c) L(ci, c) = -(*sol)[c] / index[ci];
  }
  return L;
}

}  // namespace oracle
