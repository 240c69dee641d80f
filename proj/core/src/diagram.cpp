#include "dihedral/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "dihedral/errors.hpp"
#include "json.hpp"

namespace dih {

void validate(const KnotDiagram& d) {
  require(d.arcs >= 1, "diagram needs at least one arc");
  if (d.crossings.empty()) return;
  std::vector<int> nin(d.arcs, 0), nout(d.arcs, 0);
  for (auto& c : d.crossings) {
    for (int a : {c.over, c.under_in, c.under_out})
      require(a >= 0 && a < d.arcs, "crossing references unknown arc " + std::to_string(a));
    require(c.sign == 1 || c.sign == -1, "crossing sign must be +1 or -1");
    ++nin[c.under_in];
    ++nout[c.under_out];
  }
  for (int a = 0; a < d.arcs; ++a)
    require(nin[a] == 1 && nout[a] == 1,
            "arc " + std::to_string(a) + " must end and start exactly once at an undercrossing");
  if (d.over_order.empty()) return;
  require(int(d.over_order.size()) == d.arcs, "over_order needs one list per arc");
  std::vector<int> hit(d.crossings.size(), 0);
  for (int a = 0; a < d.arcs; ++a)
    for (int j : d.over_order[a]) {
      require(j >= 0 && j < int(d.crossings.size()) && d.crossings[j].over == a,
              "over_order lists a crossing the arc does not pass over");
      ++hit[j];
    }
  for (int h : hit) require(h == 1, "over_order must list every crossing once");
}

bool has_over_order(const KnotDiagram& d) {
  if (!d.over_order.empty()) return true;
  // unambiguous when no arc passes over twice
  std::vector<int> n(d.arcs, 0);
  for (auto& c : d.crossings)
    if (++n[c.over] > 1) return false;
  return true;
}

std::vector<ArcEnds> arc_ends(const KnotDiagram& d) {
  std::vector<ArcEnds> e(d.arcs);
  for (int j = 0; j < int(d.crossings.size()); ++j) {
    e[d.crossings[j].under_in].end = j;
    e[d.crossings[j].under_out].start = j;
  }
  return e;
}

std::vector<std::vector<int>> components(const KnotDiagram& d, std::vector<int>* comp_of) {
  validate(d);
  std::vector<int> cid(d.arcs, -1);
  std::vector<std::vector<int>> comps;
  auto ends = arc_ends(d);
  for (int a0 = 0; a0 < d.arcs; ++a0) {
    if (cid[a0] >= 0) continue;
    std::vector<int> comp;
    int a = a0;
    do {
      cid[a] = int(comps.size());
      comp.push_back(a);
      if (d.crossings.empty()) break;
      a = d.crossings[ends[a].end].under_out;
    } while (a != a0);
    comps.push_back(comp);
  }
  if (comp_of) *comp_of = cid;
  return comps;
}

int writhe(const KnotDiagram& d) {
  int w = 0;
  for (auto& c : d.crossings) w += c.sign;
  return w;
}

KnotDiagram kinked_unknot(int sign) { return {1, {{0, 0, 0, sign}}, {{0}}}; }

KnotDiagram canonical_numbering(const KnotDiagram& d, int first_arc) {
  std::vector<int> cid;
  auto comps = components(d, &cid);
  require(first_arc >= 0 && first_arc < d.arcs, "bad first arc");
  std::vector<int> order;
  auto emit = [&](const std::vector<int>& comp, int from) {
    auto it = std::find(comp.begin(), comp.end(), from);
    for (size_t k = 0; k < comp.size(); ++k) order.push_back(*(comp.begin() + ((it - comp.begin()) + k) % comp.size()));
  };
  emit(comps[cid[first_arc]], first_arc);
  for (int c = 0; c < int(comps.size()); ++c)
    if (c != cid[first_arc]) emit(comps[c], comps[c][0]);
  std::vector<int> relabel(d.arcs);
  for (int k = 0; k < d.arcs; ++k) relabel[order[k]] = k;
  KnotDiagram out{d.arcs, {}, {}};
  for (auto c : d.crossings)
    out.crossings.push_back({relabel[c.over], relabel[c.under_in], relabel[c.under_out], c.sign});
  if (!d.over_order.empty()) {
    out.over_order.assign(d.arcs, {});
    for (int a = 0; a < d.arcs; ++a) out.over_order[relabel[a]] = d.over_order[a];
  }
  return out;
}

namespace {

struct Visit {
  int crossing;
  bool over;
  int dx, dy;
};

int cross(int ax, int ay, int bx, int by) { return ax * by - ay * bx; }

}  // namespace

// Four-slot plat: slot 0 is the free top strand, odd-numbered boxes (first,
// third, ...) twist slots 1,2 and carry -e_i, the others twist slots 2,3 and
// carry e_i. Left caps join slots (0,1),(2,3); right caps (0,3),(1,2).
// A positive twist puts the strand running upper-left to lower-right on top.
KnotDiagram build_two_bridge(const std::vector<int>& e) {
  require(!e.empty() && e.size() % 2 == 0, "two-bridge spec needs even positive length");
  for (int x : e) require(x != 0, "two-bridge spec entries must be nonzero");
  int B = int(e.size());
  std::vector<int> offset(B + 1, 0);
  for (int b = 0; b < B; ++b) offset[b + 1] = offset[b] + std::abs(e[b]);
  int n = offset[B];

  std::vector<std::vector<Visit>> comps;
  std::vector<int> seen(n, 0);
  for (int start : {0, 2}) {
    // a second strand exists only when the first pass left crossings half-visited
    if (!comps.empty() && std::all_of(seen.begin(), seen.end(), [](int c) { return c == 2; })) continue;
    std::vector<Visit> ev;
    int s = start, dir = 1;
    do {
      for (int k = 0; k < B; ++k) {
        int b = dir > 0 ? k : B - 1 - k;
        int lo = b % 2 == 0 ? 1 : 2;
        if (s != lo && s != lo + 1) continue;
        int t = b % 2 == 0 ? -e[b] : e[b];
        int m = std::abs(e[b]);
        for (int q = 0; q < m; ++q) {
          int j = offset[b] + (dir > 0 ? q : m - 1 - q);
          bool upper = s == lo;
          bool ullr = dir > 0 ? upper : !upper;
          Visit v{j, ullr == (t > 0), 0, 0};
          if (ullr) v.dx = dir, v.dy = -dir;
          else v.dx = dir, v.dy = dir;
          ev.push_back(v);
          ++seen[j];
          s = 2 * lo + 1 - s;
        }
      }
      if (dir > 0) s = 3 - s;
      else s = s ^ 1;
      dir = -dir;
    } while (!(s == start && dir == 1));
    comps.push_back(ev);
  }
  for (int j = 0; j < n; ++j)
    if (seen[j] != 2) throw Inconsistency("plat traversal missed a crossing");

  std::vector<Crossing> X(n);
  std::vector<int> ox(n), oy(n), ux(n), uy(n);
  int arc_base = 0;
  for (auto& ev : comps) {
    int unders = 0;
    for (auto& v : ev) unders += !v.over;
    require(unders > 0, "plat component without undercrossing");
    int a = 0;
    for (auto& v : ev) {
      int cur = arc_base + a;
      if (v.over) {
        X[v.crossing].over = cur;
        ox[v.crossing] = v.dx, oy[v.crossing] = v.dy;
      } else {
        X[v.crossing].under_in = cur;
        a = (a + 1) % unders;
        X[v.crossing].under_out = arc_base + a;
        ux[v.crossing] = v.dx, uy[v.crossing] = v.dy;
      }
    }
    arc_base += unders;
  }
  for (int j = 0; j < n; ++j) X[j].sign = cross(ox[j], oy[j], ux[j], uy[j]) > 0 ? 1 : -1;
  std::vector<std::vector<int>> order(arc_base);
  for (auto& ev : comps)
    for (auto& v : ev)
      if (v.over) order[X[v.crossing].over].push_back(v.crossing);
  // the arc through the start point is split by it; rotate so it begins after the last undercrossing
  arc_base = 0;
  for (auto& ev : comps) {
    int first_under = 0;
    while (ev[first_under].over) ++first_under;
    auto& o = order[arc_base];
    std::rotate(o.begin(), o.begin() + first_under, o.end());
    for (auto& v : ev) arc_base += !v.over;
  }
  KnotDiagram d{arc_base, X, order};
  validate(d);
  return d;
}

std::vector<int> K1_spec(long a, long b) {
  require(a != 0 && b != 0, "K1(a,b) needs a != 0 and b != 0");
  return {int(2 * a), 2, int(2 * b), -2, int(-2 * a), int(2 * b)};
}

std::vector<int> K2_spec(long a, long b) {
  require(a != 0 && b != 0, "K2(a,b) needs a != 0 and b != 0");
  return {int(2 * a), 2, int(2 * b), int(2 * a), 2, int(2 * b)};
}

KnotDiagram build_K1(long a, long b) { return build_two_bridge(K1_spec(a, b)); }
KnotDiagram build_K2(long a, long b) { return build_two_bridge(K2_spec(a, b)); }

Presentation wirtinger(const KnotDiagram& d) {
  validate(d);
  Presentation P{d.arcs, {}};
  for (auto& c : d.crossings) {
    if (c.sign > 0)
      P.relators.push_back({{c.over, 1}, {c.under_in, -1}, {c.over, -1}, {c.under_out, 1}});
    else
      P.relators.push_back({{c.over, 1}, {c.under_out, 1}, {c.over, -1}, {c.under_in, -1}});
  }
  return P;
}

IMat abelianized(const Presentation& P) {
  IMat R(int(P.relators.size()), P.generators);
  for (int i = 0; i < R.rows; ++i)
    for (auto [g, e] : P.relators[i]) R(i, g) += e;
  return R;
}

Homology first_homology(const Presentation& P) {
  IMat R = abelianized(P);
  return homology(IMat(0, P.generators), R.transpose(), P.generators);
}

KnotDiagram from_pd(const std::vector<std::array<int, 4>>& pd) {
  require(!pd.empty(), "empty PD code");
  std::map<int, int> idx;
  for (auto& x : pd)
    for (int e : x) idx.emplace(e, 0);
  int E = 0;
  for (auto& kv : idx) kv.second = E++;
  std::vector<int> cnt(E, 0);
  for (auto& x : pd)
    for (int e : x) ++cnt[idx[e]];
  for (int c : cnt) require(c == 2, "PD code must use every edge label exactly twice");

  std::vector<int> uf(E);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  // strand components; each must be a consecutive block of edge labels
  for (auto& x : pd) {
    uf[find(idx[x[0]])] = find(idx[x[2]]);
    uf[find(idx[x[1]])] = find(idx[x[3]]);
  }
  std::vector<int> lo(E, E), hi(E, -1), size(E, 0);
  for (int e = 0; e < E; ++e) {
    int r = find(e);
    lo[r] = std::min(lo[r], e), hi[r] = std::max(hi[r], e), ++size[r];
  }
  for (int e = 0; e < E; ++e)
    require(hi[find(e)] - lo[find(e)] + 1 == size[find(e)], "PD component edges must be consecutive labels");
  std::vector<int> strand(E);
  for (int e = 0; e < E; ++e) strand[e] = find(e);
  auto next = [&](int e) { return e == hi[strand[e]] ? lo[strand[e]] : e + 1; };

  int n = int(pd.size());
  std::vector<std::array<int, 4>> X(n);
  std::vector<int> sign(n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < 4; ++k) X[j][k] = idx[pd[j][k]];
    require(next(X[j][0]) == X[j][2], "PD under strand must run from a to c");
    bool fwd = next(X[j][3]) == X[j][1], bwd = next(X[j][1]) == X[j][3];
    require(fwd != bwd, "PD over strand orientation is ambiguous");
    sign[j] = fwd ? 1 : -1;
  }
  // arcs: edges joined through overpasses
  std::iota(uf.begin(), uf.end(), 0);
  for (auto& x : X) uf[find(x[1])] = find(x[3]);
  std::vector<int> arc(E, -1);
  int A = 0;
  for (int e = 0; e < E; ++e)
    if (arc[find(e)] < 0) arc[find(e)] = A++;
  KnotDiagram d{A, {}, std::vector<std::vector<int>>(A)};
  for (int j = 0; j < n; ++j) d.crossings.push_back({arc[find(X[j][1])], arc[find(X[j][0])], arc[find(X[j][2])], sign[j]});
  std::vector<int> head_over(E, -1);
  for (int j = 0; j < n; ++j) head_over[sign[j] > 0 ? X[j][3] : X[j][1]] = j;
  for (int j = 0; j < n; ++j)
    for (int e = X[j][2]; head_over[e] >= 0; e = next(e)) d.over_order[arc[find(e)]].push_back(head_over[e]);
  validate(d);
  return canonical_numbering(d, arc[find(0)]);
}

std::string to_json(const KnotDiagram& d) {
  nlohmann::json j;
  j["arcs"] = d.arcs;
  j["crossings"] = nlohmann::json::array();
  for (auto& c : d.crossings) j["crossings"].push_back({c.over, c.under_in, c.under_out, c.sign});
  if (!d.over_order.empty()) j["over_order"] = d.over_order;
  return j.dump();
}

KnotDiagram diagram_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw InvalidInput(std::string("diagram JSON: ") + e.what());
  }
  try {
    if (j.contains("pd")) return from_pd(j["pd"].get<std::vector<std::array<int, 4>>>());
    if (j.contains("two_bridge")) return build_two_bridge(j["two_bridge"].get<std::vector<int>>());
    KnotDiagram d;
    d.arcs = j.at("arcs").get<int>();
    for (auto& c : j.at("crossings")) {
      auto v = c.get<std::vector<int>>();
      require(v.size() == 4, "crossing must be [over, under_in, under_out, sign]");
      d.crossings.push_back({v[0], v[1], v[2], v[3]});
    }
    if (j.contains("over_order")) d.over_order = j["over_order"].get<std::vector<std::vector<int>>>();
    validate(d);
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("diagram JSON: ") + e.what());
  }
}

}  // namespace dih
