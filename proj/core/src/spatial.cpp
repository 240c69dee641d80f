#include <algorithm>
#include <cmath>
#include <map>

#include "dihedral/diagram.hpp"
#include "dihedral/errors.hpp"

namespace dih {

namespace {

struct Degenerate {};

struct Seg {
  int comp, idx;
  double x0, y0, z0, x1, y1, z1;
};

struct Event {
  int seg;
  double t;
  int crossing;
  bool under;
};

struct Hit {
  int over_comp, under_comp, sign;
};

Point3 rotate(const Point3& p, const double R[3][3]) {
  return {R[0][0] * p.x + R[0][1] * p.y + R[0][2] * p.z, R[1][0] * p.x + R[1][1] * p.y + R[1][2] * p.z,
          R[2][0] * p.x + R[2][1] * p.y + R[2][2] * p.z};
}

void rotation(double a, double b, double c, double R[3][3]) {
  double ca = std::cos(a), sa = std::sin(a), cb = std::cos(b), sb = std::sin(b), cc = std::cos(c), sc = std::sin(c);
  double X[3][3] = {{1, 0, 0}, {0, ca, -sa}, {0, sa, ca}};
  double Y[3][3] = {{cb, 0, sb}, {0, 1, 0}, {-sb, 0, cb}};
  double Z[3][3] = {{cc, -sc, 0}, {sc, cc, 0}, {0, 0, 1}};
  double T[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      T[i][j] = 0;
      for (int k = 0; k < 3; ++k) T[i][j] += Y[i][k] * X[k][j];
    }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      R[i][j] = 0;
      for (int k = 0; k < 3; ++k) R[i][j] += Z[i][k] * T[k][j];
    }
}

Projection project_once(const std::vector<Polyline>& link, const double R[3][3]) {
  const double eps = 1e-9;
  std::vector<Seg> segs;
  for (int c = 0; c < int(link.size()); ++c) {
    int n = int(link[c].size());
    for (int i = 0; i < n; ++i) {
      Point3 a = rotate(link[c][i], R), b = rotate(link[c][(i + 1) % n], R);
      segs.push_back({c, i, a.x, a.y, a.z, b.x, b.y, b.z});
    }
  }

  double lo_x = 1e300, lo_y = 1e300, hi_x = -1e300, hi_y = -1e300, total = 0;
  for (auto& s : segs) {
    lo_x = std::min({lo_x, s.x0, s.x1}), hi_x = std::max({hi_x, s.x0, s.x1});
    lo_y = std::min({lo_y, s.y0, s.y1}), hi_y = std::max({hi_y, s.y0, s.y1});
    total += std::hypot(s.x1 - s.x0, s.y1 - s.y0);
  }
  double cell = std::max(2 * total / double(segs.size()), 1e-6);
  int gx = std::min(4096, int((hi_x - lo_x) / cell) + 1), gy = std::min(4096, int((hi_y - lo_y) / cell) + 1);
  double cx = (hi_x - lo_x) / gx + 1e-12, cy = (hi_y - lo_y) / gy + 1e-12;
  std::vector<std::vector<int>> grid(size_t(gx) * gy);
  auto cell_of = [&](double x, double y) {
    int i = std::clamp(int((x - lo_x) / cx), 0, gx - 1), j = std::clamp(int((y - lo_y) / cy), 0, gy - 1);
    return std::pair{i, j};
  };
  for (int k = 0; k < int(segs.size()); ++k) {
    auto& s = segs[k];
    auto [i0, j0] = cell_of(std::min(s.x0, s.x1), std::min(s.y0, s.y1));
    auto [i1, j1] = cell_of(std::max(s.x0, s.x1), std::max(s.y0, s.y1));
    for (int i = i0; i <= i1; ++i)
      for (int j = j0; j <= j1; ++j) grid[size_t(i) * gy + j].push_back(k);
  }

  std::vector<std::vector<Event>> events(link.size());
  std::vector<Hit> hits;
  for (size_t g = 0; g < grid.size(); ++g) {
    auto& list = grid[g];
    for (size_t p = 0; p < list.size(); ++p)
      for (size_t q = p + 1; q < list.size(); ++q) {
        const Seg &a = segs[list[p]], &b = segs[list[q]];
        int na = int(link[a.comp].size());
        bool adj_ab = a.comp == b.comp && (a.idx + 1) % na == b.idx;
        bool adj_ba = a.comp == b.comp && (b.idx + 1) % na == a.idx;
        double rx = a.x1 - a.x0, ry = a.y1 - a.y0, sx = b.x1 - b.x0, sy = b.y1 - b.y0;
        double den = rx * sy - ry * sx;
        double qx = b.x0 - a.x0, qy = b.y0 - a.y0;
        double scale = std::hypot(rx, ry) * std::hypot(sx, sy);
        if (std::abs(den) <= 1e-12 * scale) {
          if (adj_ab || adj_ba) {
            // folded back onto itself?
            if (rx * sx + ry * sy < 0) throw Degenerate{};
            continue;
          }
          if (std::abs(qx * ry - qy * rx) > 1e-9 * std::hypot(rx, ry)) continue;
          double r2 = rx * rx + ry * ry;
          double t0 = (qx * rx + qy * ry) / r2, t1 = ((b.x1 - a.x0) * rx + (b.y1 - a.y0) * ry) / r2;
          if (std::max(t0, t1) >= -eps && std::min(t0, t1) <= 1 + eps) throw Degenerate{};
          continue;
        }
        double t = (qx * sy - qy * sx) / den, u = (qx * ry - qy * rx) / den;
        if (adj_ab && std::abs(t - 1) < eps && std::abs(u) < eps) continue;
        if (adj_ba && std::abs(t) < eps && std::abs(u - 1) < eps) continue;
        if (t < -eps || t > 1 + eps || u < -eps || u > 1 + eps) continue;
        if (t < eps || t > 1 - eps || u < eps || u > 1 - eps) throw Degenerate{};
        // count each crossing once, in the cell holding it
        double px = a.x0 + t * rx, py = a.y0 + t * ry;
        auto [ci, cj] = cell_of(px, py);
        if (size_t(ci) * gy + cj != g) continue;
        double za = a.z0 + t * (a.z1 - a.z0), zb = b.z0 + u * (b.z1 - b.z0);
        if (std::abs(za - zb) < 1e-7) throw Degenerate{};
        bool a_over = za > zb;
        const Seg &o = a_over ? a : b, &un = a_over ? b : a;
        double to = a_over ? t : u, tu = a_over ? u : t;
        double ox = o.x1 - o.x0, oy = o.y1 - o.y0, ux = un.x1 - un.x0, uy = un.y1 - un.y0;
        int sign = ox * uy - oy * ux > 0 ? 1 : -1;
        int id = int(hits.size());
        hits.push_back({o.comp, un.comp, sign});
        events[o.comp].push_back({o.idx, to, id, false});
        events[un.comp].push_back({un.idx, tu, id, true});
      }
  }

  Projection pr;
  auto& d = pr.diagram;
  int X = int(hits.size());
  d.crossings.assign(X, {});
  for (int j = 0; j < X; ++j) d.crossings[j].sign = hits[j].sign;
  pr.segment_arc.resize(link.size());
  std::vector<std::vector<std::pair<int, int>>> over_lists;  // per arc: (rank, crossing)
  int base = 0;
  std::vector<Crossing> kinks;
  for (int c = 0; c < int(link.size()); ++c) {
    auto& ev = events[c];
    std::sort(ev.begin(), ev.end(), [](auto& x, auto& y) { return x.seg != y.seg ? x.seg < y.seg : x.t < y.t; });
    int m = 0;
    for (auto& e : ev) m += e.under;
    int n = int(link[c].size());
    pr.segment_arc[c].assign(n, base);
    int arcs = std::max(m, 1);
    over_lists.resize(base + arcs);
    int seen = 0;
    size_t k = 0;
    for (int s = 0; s < n; ++s) {
      pr.segment_arc[c][s] = base + (m ? seen % m : 0);
      for (; k < ev.size() && ev[k].seg == s; ++k) {
        auto& e = ev[k];
        int rank = int(k);
        if (e.under) {
          d.crossings[e.crossing].under_in = base + seen % m;
          d.crossings[e.crossing].under_out = base + (seen + 1) % m;
          ++seen;
        } else {
          int arc = base + (m ? seen % m : 0);
          // on arc 0 the stretch after the last undercrossing comes first
          if (m && seen == m) rank -= int(ev.size());
          d.crossings[e.crossing].over = arc;
          over_lists[arc].push_back({rank, e.crossing});
        }
      }
    }
    if (!m) kinks.push_back({base, base, base, 1});
    base += arcs;
  }
  d.arcs = base;
  for (auto& kc : kinks) {
    int j = int(d.crossings.size());
    d.crossings.push_back(kc);
    over_lists[kc.over].push_back({1 << 30, j});
  }
  d.over_order.assign(d.arcs, {});
  for (int a = 0; a < d.arcs; ++a) {
    std::sort(over_lists[a].begin(), over_lists[a].end());
    for (auto& [r, j] : over_lists[a]) d.over_order[a].push_back(j);
  }
  validate(d);

  int C = int(link.size());
  pr.linking.assign(C, std::vector<long>(C, 0));
  std::vector<std::vector<long>> half(C, std::vector<long>(C, 0));
  for (auto& h : hits)
    if (h.over_comp != h.under_comp) half[h.over_comp][h.under_comp] += h.sign;
  for (int a = 0; a < C; ++a)
    for (int b = 0; b < C; ++b) {
      if (a == b) continue;
      if (half[a][b] != half[b][a]) throw Inconsistency("over and under linking counts disagree");
      pr.linking[a][b] = half[a][b];
    }
  return pr;
}

}  // namespace

Projection project(const std::vector<Polyline>& link) {
  require(!link.empty(), "empty link");
  for (auto& p : link) require(p.size() >= 3, "a closed polyline needs at least three points");
  const double tries[][3] = {{0.0123, 0.0217, 0.0071}, {0.0311, -0.0173, 0.0419}, {-0.0277, 0.0133, -0.0359},
                             {0.0519, 0.0461, 0.0203}, {-0.0613, -0.0547, 0.0311}};
  for (auto& a : tries) {
    double R[3][3];
    rotation(a[0], a[1], a[2], R);
    try {
      return project_once(link, R);
    } catch (const Degenerate&) {
    }
  }
  throw InvalidInput("no generic projection found: the polylines touch or nearly touch");
}

Projection overlay(const Polyline& knot, const std::vector<CurveOverlay>& curves) {
  std::vector<Polyline> link{knot};
  for (auto& c : curves) link.push_back(c.walk);
  return project(link);
}

}  // namespace dih
