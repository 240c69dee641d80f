#include "dihedral/surface.hpp"

#include <algorithm>
#include <cmath>

#include "dihedral/errors.hpp"

namespace dih {

namespace {

struct V3 {
  double x, y, z;
};
V3 operator+(V3 a, V3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
V3 operator*(double s, V3 a) { return {s * a.x, s * a.y, s * a.z}; }
V3 cross(V3 a, V3 b) { return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x}; }
V3 unit(V3 a) {
  double n = std::sqrt(a.x * a.x + a.y * a.y + a.z * a.z);
  return {a.x / n, a.y / n, a.z / n};
}

const double kTwistLo = 1.35, kTwistHi = 1.8;
const double kBump = 1.5, kBumpWidth = 0.35;
// where neighbouring arches of equal height cross, on the left and right arch
const double kCrossRight = std::acos(-2.0 / 3.0), kCrossLeft = std::acos(2.0 / 3.0);

double smooth(double x) { return x <= 0 ? 0 : x >= 1 ? 1 : x * x * (3 - 2 * x); }
double dsmooth(double x) { return x <= 0 || x >= 1 ? 0 : 6 * x * (1 - x); }

struct Band {
  const PlumbedSurface& S;
  int i;
  double c() const { return 3.0 * i + 2.25; }
  double bump_at() const {
    if (i + 1 < S.bands() && S.over[i]) return kCrossRight;
    if (i > 0 && !S.over[i - 1]) return kCrossLeft;
    return -1;
  }
  std::pair<double, double> z(double t) const {
    double tc = bump_at();
    if (tc < 0 || std::abs(t - tc) >= kBumpWidth) return {0, 0};
    double a = M_PI * (t - tc) / (2 * kBumpWidth), cs = std::cos(a);
    return {kBump * cs * cs, -kBump * 2 * cs * std::sin(a) * M_PI / (2 * kBumpWidth)};
  }
  double twist(double t) const {
    return 2 * M_PI * S.turns[i] * smooth((t - kTwistLo) / (kTwistHi - kTwistLo));
  }
  V3 core(double t) const { return {c() - 2.25 * std::cos(t), S.arch * std::sin(t), z(t).first}; }
  // point at lateral s (in half-widths) and normal height h
  Point3 at(double t, double s, double h) const {
    V3 T = unit({2.25 * std::sin(t), S.arch * std::cos(t), z(t).second});
    V3 u0 = unit({-T.y, T.x, 0});
    V3 n0 = cross(T, u0);
    double f = twist(t), cf = std::cos(f), sf = std::sin(f);
    V3 u = cf * u0 + sf * n0, n = (-sf) * u0 + cf * n0;
    V3 p = core(t) + (s * S.half_width) * u + h * n;
    return {p.x, p.y, p.z};
  }
  std::vector<double> samples() const {
    std::vector<double> t;
    int per_turn = 32;
    int nt = std::max(8, std::abs(S.turns[i]) * per_turn);
    for (double x = 0; x < kTwistLo - 1e-9; x += 0.02) t.push_back(x);
    for (int k = 0; k < nt; ++k) t.push_back(kTwistLo + (kTwistHi - kTwistLo) * k / nt);
    for (double x = kTwistHi; x < M_PI - 1e-9; x += 0.02) t.push_back(x);
    t.push_back(M_PI);
    return t;
  }
};

void segment_line(Polyline& out, Point3 a, Point3 b, double step = 0.4) {
  // points from a (included) towards b (excluded)
  double len = std::hypot(b.x - a.x, b.y - a.y, b.z - a.z);
  int n = std::max(1, int(std::ceil(len / step)));
  for (int k = 0; k < n; ++k) {
    double s = double(k) / n;
    out.push_back({a.x + s * (b.x - a.x), a.y + s * (b.y - a.y), a.z + s * (b.z - a.z)});
  }
}

// points of the half-circle chord strictly between x1 and x2 (y < 0)
void chord(Polyline& out, double x1, double x2, double h) {
  double m = (x1 + x2) / 2, r = std::abs(x2 - x1) / 2;
  int n = std::max(12, int(std::ceil(M_PI * r / 0.15)));
  for (int k = 1; k < n; ++k) {
    double f = M_PI * k / n;
    double ang = x1 < x2 ? M_PI - f : f;
    out.push_back({m + r * std::cos(ang), -r * std::sin(ang), h});
  }
}

bool crossing_chords(std::pair<double, double> a, std::pair<double, double> b) {
  double a0 = std::min(a.first, a.second), a1 = std::max(a.first, a.second);
  auto inside = [&](double x) { return x > a0 && x < a1; };
  return inside(b.first) != inside(b.second);
}

std::vector<std::pair<double, double>> chords_of(const PlumbedSurface& S, const SurfaceWord& w) {
  std::vector<std::pair<double, double>> c;
  for (size_t t = 0; t < w.size(); ++t) c.push_back({exit_x(S, w[t]), entry_x(S, w[(t + 1) % w.size()])});
  return c;
}

void check_word(const PlumbedSurface& S, const SurfaceWord& w) {
  require(!w.empty(), "surface curve needs at least one band pass");
  for (auto& b : w) {
    require(b.band >= 0 && b.band < S.bands(), "band index out of range");
    require(b.dir == 1 || b.dir == -1, "band pass direction must be +-1");
    require(std::abs(b.slot) < 1, "slot must lie inside the band");
  }
}

}  // namespace

PlumbedSurface plumbed_surface(const std::vector<int>& e) {
  auto sd = seifert_matrix_C(e);  // validates e
  PlumbedSurface S;
  S.e = e;
  int n = int(e.size());
  // band i over band i+1 puts lk(c_i, c_{i+1}^+) = orient_i orient_{i+1} above the diagonal
  S.over.assign(std::max(0, n - 1), 1);
  S.orient.resize(n);
  for (int i = 0; i < n; ++i) S.orient[i] = i % 4 < 2 ? 1 : -1;
  S.turns.resize(n);
  for (int i = 0; i < n; ++i) S.turns[i] = sd.L(i, i).get_si();
  return S;
}

double entry_x(const PlumbedSurface& S, const BandPass& b) {
  return b.dir > 0 ? S.left_foot(b.band) - b.slot * S.half_width : S.right_foot(b.band) + b.slot * S.half_width;
}
double exit_x(const PlumbedSurface& S, const BandPass& b) {
  return b.dir > 0 ? S.right_foot(b.band) + b.slot * S.half_width : S.left_foot(b.band) - b.slot * S.half_width;
}

SurfaceBoundary boundary(const PlumbedSurface& S) {
  int n = S.bands();
  double X0 = S.x_min(), X1 = S.x_max(), Y = S.depth(), hw = S.half_width;
  struct Foot {
    double x;
    int band;
    bool left;
  };
  std::vector<Foot> feet;
  for (int i = 0; i < n; ++i) feet.push_back({S.left_foot(i), i, true}), feet.push_back({S.right_foot(i), i, false});
  std::sort(feet.begin(), feet.end(), [](auto& a, auto& b) { return a.x < b.x; });

  SurfaceBoundary out;
  auto& P = out.curve;
  segment_line(P, {X0, -Y, 0}, {X1, -Y, 0});
  segment_line(P, {X1, -Y, 0}, {X1, 0, 0});
  // top edge right to left; at each foot, run along the band edge to its other foot
  std::vector<int> used(2 * n, 0);
  std::vector<EdgeGap> gaps;
  double x = X1;
  int k = int(feet.size()) - 1;
  int guard = 0;
  while (true) {
    require(++guard < 10 * n + 10, "boundary walk does not close");
    double stop = k >= 0 ? feet[k].x + hw : X0;
    int seg = int(P.size());
    segment_line(P, {x, 0, 0}, {stop, 0, 0});
    gaps.push_back({stop, x, seg + (int(P.size()) - seg) / 2});
    if (k < 0) break;
    Band b{S, feet[k].band};
    auto ts = b.samples();
    int edge = 2 * feet[k].band + (feet[k].left ? 0 : 1);
    if (used[edge]) throw Inconsistency("boundary walk reuses a band edge");
    used[edge] = 1;
    double target;
    if (feet[k].left) {
      // x = L + hw is lateral -1: run to the right foot
      for (double t : ts)
        if (t < M_PI) P.push_back(b.at(t, -1, 0));
      target = S.right_foot(feet[k].band) - hw;
    } else {
      for (auto it = ts.rbegin(); it != ts.rend(); ++it)
        if (*it > 0) P.push_back(b.at(*it, 1, 0));
      target = S.left_foot(feet[k].band) - hw;
    }
    x = target;
    k = -1;
    for (int j = int(feet.size()) - 1; j >= 0; --j)
      if (feet[j].x + hw <= x + 1e-9) {
        k = j;
        break;
      }
  }
  segment_line(P, {X0, 0, 0}, {X0, -Y, 0});
  for (int u : used)
    if (!u) throw InvalidInput("twist pattern gives a boundary with several components");
  std::sort(gaps.begin(), gaps.end(), [](auto& a, auto& b) { return a.x0 < b.x0; });
  out.gaps = gaps;
  return out;
}

SpatialCurve surface_curve(const PlumbedSurface& S, const SurfaceWord& w, double h, double lateral) {
  check_word(S, w);
  SpatialCurve out;
  auto& P = out.curve;
  for (size_t t = 0; t < w.size(); ++t) {
    auto b = w[t];
    b.slot += lateral;
    require(std::abs(b.slot) < 1, "lateral offset leaves the band");
    Band band{S, b.band};
    auto ts = band.samples();
    if (b.dir < 0) std::reverse(ts.begin(), ts.end());
    for (double th : ts) P.push_back(band.at(th, b.slot, h));
    auto nb = w[(t + 1) % w.size()];
    nb.slot += lateral;
    double x1 = exit_x(S, b), x2 = entry_x(S, nb);
    int start = int(P.size());
    chord(P, x1, x2, h);
    out.chord_segment.push_back(start + (int(P.size()) - start) / 2);
    out.chord_ends.push_back({x1, x2});
  }
  return out;
}

SurfaceWord core_word(const PlumbedSurface& S, int i) {
  require(i >= 0 && i < S.bands(), "band index out of range");
  return {{i, S.orient[i], 0.0}};
}

HomologyClass word_class(const PlumbedSurface& S, const SurfaceWord& w) {
  check_word(S, w);
  HomologyClass v(S.bands(), 0);
  for (auto& b : w) v[b.band] += b.dir * S.orient[b.band];
  return v;
}

bool embedded(const PlumbedSurface& S, const SurfaceWord& w) {
  check_word(S, w);
  for (size_t a = 0; a < w.size(); ++a)
    for (size_t b = a + 1; b < w.size(); ++b)
      if (w[a].band == w[b].band && std::abs(w[a].slot - w[b].slot) < 1e-9) return false;
  auto c = chords_of(S, w);
  for (size_t a = 0; a < c.size(); ++a)
    for (size_t b = a + 1; b < c.size(); ++b)
      if (crossing_chords(c[a], c[b])) return false;
  return true;
}

bool disjoint(const PlumbedSurface& S, const SurfaceWord& a, const SurfaceWord& b) {
  for (auto& x : a)
    for (auto& y : b)
      if (x.band == y.band && std::abs(x.slot - y.slot) < 1e-9) return false;
  auto ca = chords_of(S, a), cb = chords_of(S, b);
  for (auto& x : ca)
    for (auto& y : cb)
      if (crossing_chords(x, y)) return false;
  return true;
}

SurfaceWord shifted(const SurfaceWord& w, double sigma) {
  SurfaceWord out = w;
  for (auto& b : out) b.slot += b.dir * sigma;
  return out;
}

std::vector<SurfaceWord> realizations(const PlumbedSurface& S, const HomologyClass& v,
                                      const std::vector<SurfaceWord>& avoid, int limit) {
  require(int(v.size()) == S.bands(), "class length must match the number of bands");
  std::vector<BandPass> passes;
  for (int i = 0; i < S.bands(); ++i)
    for (long k = 0; k < std::abs(v[i]); ++k) passes.push_back({i, v[i] > 0 ? S.orient[i] : -S.orient[i], 0});
  require(!passes.empty(), "the zero class has no curve");
  const double grid[] = {0, 0.3, -0.3, 0.6, -0.6};
  std::vector<std::pair<double, double>> fixed;
  for (auto& a : avoid) {
    auto c = chords_of(S, a);
    fixed.insert(fixed.end(), c.begin(), c.end());
  }
  auto clash = [&](const BandPass& b, const SurfaceWord& w) {
    for (auto& x : w)
      if (x.band == b.band && std::abs(x.slot - b.slot) < 1e-9) return true;
    return false;
  };
  auto chord_ok = [&](std::pair<double, double> c, const std::vector<std::pair<double, double>>& own) {
    for (auto& x : fixed)
      if (crossing_chords(x, c)) return false;
    for (auto& x : own)
      if (crossing_chords(x, c)) return false;
    return true;
  };
  auto by_key = [](const BandPass& a, const BandPass& b) { return std::pair(a.band, a.dir) < std::pair(b.band, b.dir); };
  std::vector<SurfaceWord> out;
  std::vector<BandPass> rest(passes.begin() + 1, passes.end());
  std::sort(rest.begin(), rest.end(), by_key);
  do {
    std::vector<BandPass> order{passes[0]};
    order.insert(order.end(), rest.begin(), rest.end());
    SurfaceWord w;
    std::vector<std::pair<double, double>> own;
    auto dfs = [&](auto&& self, size_t t) -> void {
      if (int(out.size()) >= limit) return;
      if (t == order.size()) {
        std::pair<double, double> last{exit_x(S, w.back()), entry_x(S, w.front())};
        if (w.size() > 1 && !chord_ok(last, own)) return;
        if (w.size() == 1 && !chord_ok(last, {})) return;
        out.push_back(w);
        return;
      }
      for (double g : grid) {
        BandPass b = order[t];
        b.slot = g;
        if (clash(b, w)) continue;
        bool bad = false;
        for (auto& a : avoid) bad = bad || clash(b, a);
        if (bad) continue;
        if (t > 0) {
          std::pair<double, double> c{exit_x(S, w.back()), entry_x(S, b)};
          if (!chord_ok(c, own)) continue;
          own.push_back(c);
        }
        w.push_back(b);
        self(self, t + 1);
        w.pop_back();
        if (t > 0) own.pop_back();
      }
    };
    dfs(dfs, 0);
  } while (int(out.size()) < limit && std::next_permutation(rest.begin(), rest.end(), by_key));
  return out;
}

IMat core_linking(const PlumbedSurface& S) {
  int n = S.bands();
  IMat M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto a = surface_curve(S, core_word(S, i), 0, i == j ? 0 : -0.3);
      auto b = surface_curve(S, core_word(S, j), 0.05, i == j ? 0.1 : 0.3);
      M(i, j) = project({a.curve, b.curve}).linking[0][1];
    }
  return M;
}

}  // namespace dih
