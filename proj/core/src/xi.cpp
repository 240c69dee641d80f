#include "dihedral/xi.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "dihedral/dihedral.hpp"
#include "dihedral/errors.hpp"
#include "dihedral/signatures.hpp"
#include "json.hpp"

namespace dih {

namespace {

const double kBetaShift = 0.1;     // parallel copy of beta
const double kFrameShift = 0.05;   // second copy of every curve, for the diagonal
const double kCoreHeight = 0.05;

long mod(long x, long p) { return ((x % p) + p) % p; }

long pairing(const IMat& M, const HomologyClass& a, const HomologyClass& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) s += a[i] * M(i, j) * b[j];
  return s.get_si();
}

int rank_of(const std::vector<HomologyClass>& vs) {
  if (vs.empty()) return 0;
  IMat M(int(vs.size()), int(vs[0].size()));
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = 0; j < vs[i].size(); ++j) M(int(i), int(j)) = vs[i][j];
  return rank_q(M);
}

// rotation part of the holonomy of a pseudo component under a Fox coloring
long transport(const KnotDiagram& d, const std::vector<int>& comp, const std::vector<std::vector<int>>& walks,
               const std::vector<long>& color, int c, long p) {
  auto ends = arc_ends(d);
  long s = 1, t = 0;
  for (int a : walks[c]) {
    auto& x = d.crossings[ends[a].end];
    if (comp[x.over] != 0) continue;
    s = -s, t = mod(2 * color[x.over] - t, p);
  }
  if (s != 1) throw Inconsistency("a pushed-off core links the knot an odd number of times");
  return t;
}

// inside the half-disk bounded by a chord with ends x1, x2
bool inside(std::pair<double, double> ch, double x, double y) {
  double m = (ch.first + ch.second) / 2, r = std::abs(ch.second - ch.first) / 2;
  return std::hypot(x - m, y) < r;
}

struct Instance {
  int base;  // 0..r-1: w curves, r: beta copy
  int component;
  SpatialCurve curve;
};

}  // namespace

BasisCurveSet basis_curves(const PlumbedSurface& S, const IMat& L, const HomologyClass& beta, long p,
                           const SurfaceWord& beta_word, std::vector<SurfaceWord> w_words, int side) {
  int n = S.bands();
  require(n % 2 == 0 && n >= 2, "the surface needs an even number of bands");
  require(int(beta.size()) == n, "class length must match the surface");
  require(embedded(S, beta_word), "beta must be realized by an embedded curve");
  require(word_class(S, beta_word) == beta, "the realization of beta has the wrong class");
  require(side == 1 || side == -1, "side must be +-1");
  IMat skew = sub(L, L.transpose());
  BasisCurveSet out;
  out.beta_word = beta_word;
  out.r = n - 2;
  if (w_words.empty()) {
    std::vector<HomologyClass> cands;
    HomologyClass v(n, -1);
    while (true) {
      bool zero = std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
      if (!zero && pairing(skew, v, beta) == 0) cands.push_back(v);
      int i = 0;
      while (i < n && v[i] == 1) v[i++] = -1;
      if (i == n) break;
      ++v[i];
    }
    auto support = [](const HomologyClass& x) { return std::count_if(x.begin(), x.end(), [](long y) { return y != 0; }); };
    std::stable_sort(cands.begin(), cands.end(), [&](auto& a, auto& b) { return support(a) < support(b); });
    std::vector<HomologyClass> span{beta};
    for (auto& c : cands) {
      if (int(out.w_words.size()) == out.r) break;
      auto trial = span;
      trial.push_back(c);
      if (rank_of(trial) < int(trial.size())) continue;
      auto found = realizations(S, c, {beta_word}, 1);
      if (found.empty()) continue;
      span = trial;
      out.w_words.push_back(found[0]);
    }
    if (int(out.w_words.size()) < out.r)
      throw InvalidInput("no embedded curves found for a basis of the complement of beta");
  } else {
    out.w_words = std::move(w_words);
  }
  require(int(out.w_words.size()) == out.r, "a basis needs 2g - 2 curves besides beta");
  std::vector<HomologyClass> span{beta};
  for (auto& w : out.w_words) {
    require(embedded(S, w), "basis curves must be embedded");
    require(disjoint(S, w, beta_word), "basis curves must miss beta");
    auto c = word_class(S, w);
    require(pairing(skew, c, beta) == 0, "basis curves must have zero intersection with beta");
    out.w_classes.push_back(c);
    span.push_back(c);
  }
  require(rank_of(span) == int(span.size()), "basis curves must be independent of beta and of each other");
  out.beta_copy = shifted(beta_word, side * kBetaShift);
  require(embedded(S, out.beta_copy) && disjoint(S, out.beta_copy, beta_word), "parallel copy of beta is not clean");
  for (auto& w : out.w_words) require(disjoint(S, w, out.beta_copy), "parallel copy of beta meets a basis curve");
  for (int j = 0; j <= out.r; ++j)
    for (long y = 0; y < (p - 1) / 2; ++y)
      out.element_labels.push_back((j < out.r ? "w" + std::to_string(j + 1) : std::string("beta")) + "[" +
                                   std::to_string(y) + "]");
  return out;
}

LinkingMatrix linking_matrix_A(const XiInput& in) {
  long p = in.p;
  require(p >= 3 && p % 2 == 1, "p must be odd");
  auto S = plumbed_surface(in.e);
  IMat L = seifert_matrix_C(in.e).L;
  IMat LV = symmetrize(L);
  require(is_characteristic(LV, in.beta, p), "beta is not a characteristic class mod p");
  SurfaceWord bw = in.beta_word;
  if (bw.empty()) {
    auto found = realizations(S, in.beta, {}, 1);
    if (found.empty()) throw InvalidInput("no embedded realization of beta found");
    bw = found[0];
  }
  LinkingMatrix out;
  out.basis = basis_curves(S, L, in.beta, p, bw, in.w_words, in.side);
  auto& B = out.basis;
  int n = S.bands(), r = B.r;
  auto bd = boundary(S);

  // the coloring: rotations along the pushed-off cores are proportional to L beta
  std::vector<Polyline> small{bd.curve};
  for (int i = 0; i < n; ++i) small.push_back(surface_curve(S, core_word(S, i), kCoreHeight + 0.01 * i).curve);
  auto sp = project(small);
  std::vector<int> scomp;
  auto swalks = components(sp.diagram, &scomp);
  std::vector<bool> spseudo(sp.diagram.arcs);
  for (int a = 0; a < sp.diagram.arcs; ++a) spseudo[a] = scomp[a] != 0;
  std::vector<long> Lb(n);
  for (int i = 0; i < n; ++i) {
    Int s = 0;
    for (int j = 0; j < n; ++j) s += L(i, j) * in.beta[j];
    Lb[i] = mod(s.get_si(), p);
  }
  require(std::any_of(Lb.begin(), Lb.end(), [](long x) { return x != 0; }), "L beta vanishes mod p");
  std::optional<FoxColoring> chosen;
  for (auto& c : fox_colorings(sp.diagram, p, spseudo)) {
    if (!c.nontrivial()) continue;
    std::vector<long> tau(n);
    for (int i = 0; i < n; ++i) tau[i] = transport(sp.diagram, scomp, swalks, c.color, i + 1, p);
    int lead = int(std::find_if(Lb.begin(), Lb.end(), [](long x) { return x != 0; }) - Lb.begin());
    long u = 0;
    for (long k = 1; k < p; ++k)
      if (mod(k * Lb[lead], p) == tau[lead]) u = k;
    if (!u) continue;
    bool ok = true;
    for (int i = 0; i < n; ++i) ok = ok && mod(u * Lb[i], p) == tau[i];
    if (ok) {
      chosen = c;
      break;
    }
  }
  if (!chosen) throw InvalidInput("no dihedral coloring corresponds to beta");
  std::vector<long> seg_color;
  for (int a : sp.segment_arc[0]) seg_color.push_back(chosen->color[a]);

  // alpha and four parallel copies of every basis curve: +h, -h, and +h', -h' shifted
  std::vector<Polyline> link{bd.curve};
  std::vector<Instance> inst;
  for (int j = 0; j <= r; ++j) {
    const SurfaceWord& w = j < r ? B.w_words[j] : B.beta_copy;
    double h = 0.03 + 0.02 * j, h2 = h + 0.01;
    auto frame = shifted(w, kFrameShift);
    require(embedded(S, frame), "framing copy is not embedded");
    for (auto [word, height] : {std::pair{&w, h}, {&w, -h}, {&frame, h2}, {&frame, -h2}}) {
      inst.push_back({j, int(link.size()), surface_curve(S, *word, height)});
      link.push_back(inst.back().curve.curve);
    }
  }
  auto pr = project(link);
  auto& d = pr.diagram;
  out.crossings = int(d.crossings.size());
  std::vector<int> comp;
  components(d, &comp);
  std::vector<bool> pseudo(d.arcs);
  FoxColoring fc;
  fc.p = p;
  fc.color.assign(d.arcs, 0);
  std::vector<int> set(d.arcs, 0);
  for (int a = 0; a < d.arcs; ++a) pseudo[a] = comp[a] != 0;
  for (size_t s = 0; s < pr.segment_arc[0].size(); ++s) {
    int a = pr.segment_arc[0][s];
    if (set[a] && fc.color[a] != seg_color[s]) throw Inconsistency("the two projections color the knot differently");
    fc.color[a] = seg_color[s], set[a] = 1;
  }
  // arcs shorter than a segment: across a crossing c_out = 2 c_over - c_in, or c_in under a curve copy
  auto ends = arc_ends(d);
  for (bool changed = true; changed;) {
    changed = false;
    for (auto& x : d.crossings) {
      if (comp[x.under_in] != 0 || set[x.under_out] || !set[x.under_in]) continue;
      if (comp[x.over] != 0) fc.color[x.under_out] = fc.color[x.under_in];
      else if (set[x.over]) fc.color[x.under_out] = mod(2 * fc.color[x.over] - fc.color[x.under_in], p);
      else continue;
      set[x.under_out] = 1, changed = true;
    }
  }
  for (int a = 0; a < d.arcs; ++a)
    if (!pseudo[a] && !set[a]) throw Inconsistency("knot arc left without a color");
  out.coloring = fc;
  PermRep rep = coloring_to_rep(fc, pseudo);
  check_rep(d, rep);
  auto cc = lift(d, rep);

  std::map<int, int> curve_of;  // lifted 1-cell -> curve
  for (int id = 0; id < int(cc.curves.size()); ++id)
    for (int e : cc.curves[id].arcs) curve_of[e] = id;
  auto lift_at = [&](int component, int segment, int sheet) {
    int a = pr.segment_arc[component][segment];
    return curve_of.at(cc.arc_cell[a][sheet]);
  };
  auto sheet_of = [&](int component, int segment, int id) {
    int a = pr.segment_arc[component][segment];
    for (int k = 0; k < p; ++k)
      if (curve_of.at(cc.arc_cell[a][k]) == id) return k;
    throw Inconsistency("lift does not pass over its base arc");
  };

  // faces of the disk cut along beta, labelled by the sides of the beta chords
  auto beta_chords = surface_curve(S, bw, 0).chord_ends;
  auto face = [&](double x, double y) {
    std::vector<bool> f;
    for (auto& ch : beta_chords) f.push_back(inside(ch, x, y));
    return f;
  };
  // reflection of the knot across a face, from its top-edge gaps
  auto face_perm = [&](const std::vector<bool>& f) -> std::optional<std::vector<int>> {
    std::optional<std::vector<int>> mu;
    for (auto& g : bd.gaps) {
      if (face((g.x0 + g.x1) / 2, -1e-6) != f) continue;
      auto& pm = rep.perm[pr.segment_arc[0][g.segment]];
      if (mu && *mu != pm) throw Inconsistency("knot reflections disagree across one face");
      mu = pm;
    }
    return mu;
  };

  // elements u = c^+(y) - c^-(mu(y)) for y < mu(y), read at the first chord with a gap in its face
  std::vector<CurveCombo> U, U2;
  for (int j = 0; j <= r; ++j) {
    const Instance* I[4];
    for (int k = 0; k < 4; ++k) I[k] = &inst[4 * j + k];
    auto& chords = I[0]->curve.chord_ends;
    std::vector<std::pair<int, std::vector<int>>> usable;
    for (size_t t = 0; t < chords.size(); ++t) {
      double m = (chords[t].first + chords[t].second) / 2, rad = std::abs(chords[t].second - chords[t].first) / 2;
      if (auto mu = face_perm(face(m, -rad))) usable.push_back({int(t), *mu});
    }
    if (usable.empty()) throw InvalidInput("a basis curve has no chord on a face meeting the knot");
    for (int dup = 0; dup < 2; ++dup) {
      auto &P = *I[2 * dup], &M = *I[2 * dup + 1];
      auto [t0, mu0] = usable[0];
      for (int y = 0; y < p; ++y) {
        if (mu0[y] <= y) continue;
        int a = lift_at(P.component, P.curve.chord_segment[t0], y);
        int b = lift_at(M.component, M.curve.chord_segment[t0], mu0[y]);
        for (auto& [t, mu] : usable) {
          int yt = sheet_of(P.component, P.curve.chord_segment[t], a);
          if (lift_at(M.component, M.curve.chord_segment[t], mu[yt]) != b)
            throw Inconsistency("partner sheets depend on the chord they are read at");
        }
        (dup ? U2 : U).push_back({{a, 1}, {b, -1}});
      }
    }
  }
  int m = int(U.size());
  if (m != int(B.size())) throw Inconsistency("wrong number of basic elements");
  auto cycle = [&](const CurveCombo& u) {
    QVec v(cc.cells[1], Rat(0));
    for (auto [id, coef] : u)
      for (int e : cc.curves[id].arcs) v[e] += coef;
    return v;
  };
  std::vector<QVec> chains;
  for (auto& u : U) chains.push_back(bounding_chain(cc, cycle(u)));
  out.A = QMat(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) out.A(a, b) = intersect_pushoff(cc, a == b ? U2[a] : U[a], chains[b]);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < a; ++b)
      if (out.A(a, b) != out.A(b, a)) throw Inconsistency("linking matrix is not symmetric");
  out.elements = std::move(U);
  out.framed = std::move(U2);
  out.cover = std::move(cc);
  return out;
}

XiReport xi_from_terms(long p, const Int& lv_beta_beta, const QMat& A, int tl_term) {
  XiReport rep;
  rep.p = p;
  rep.A = A;
  rep.quad_term = Rat(p * p - 1, 6 * p) * Rat(lv_beta_beta);
  rep.quad_term.canonicalize();
  auto inr = inertia(A);
  rep.sigma_W = inr.signature();
  rep.rank = inr.pos + inr.neg;
  rep.nullity = inr.zero;
  rep.tl_term = tl_term;
  rep.xi = rep.quad_term + rep.sigma_W + rep.tl_term;
  rep.xi.canonicalize();
  rep.integral = rep.xi.get_den() == 1;
  return rep;
}

XiReport xi_report(const XiInput& in) {
  auto lm = linking_matrix_A(in);
  int tl = 0;
  if (in.beta_seifert) {
    tl = tl_sum(*in.beta_seifert, in.p);
  } else {
    auto S = plumbed_surface(in.e);
    auto bk = project({surface_curve(S, lm.basis.beta_word, 0).curve});
    // Delta = 1: every Tristram-Levine form is nonsingular of signature 0
    if (alexander_polynomial(bk.diagram) != std::vector<Int>{1})
      throw InvalidInput("beta is knotted: supply its Seifert matrix");
  }
  IMat LV = symmetrize(seifert_matrix_C(in.e).L);
  auto rep = xi_from_terms(in.p, quad_form(LV, in.beta), lm.A, tl);
  rep.beta_used = in.beta;
  rep.beta_word = lm.basis.beta_word;
  rep.w_classes = lm.basis.w_classes;
  return rep;
}

XiReport xi_p(const XiInput& in) {
  auto r = xi_report(in);
  if (!r.integral) throw Inconsistency("signature defect is not an integer: " + to_string(r.xi));
  return r;
}

InvarianceResult xi_invariance_check(const std::vector<XiInput>& inputs) {
  require(!inputs.empty(), "no inputs");
  auto& f = inputs[0];
  for (auto& x : inputs) {
    require(x.e == f.e && x.p == f.p, "inputs must share the knot and p");
    require(same_class_mod(x.beta, f.beta, f.p), "inputs belong to different dihedral representations");
  }
  InvarianceResult out;
  out.agree = true;
  for (auto& x : inputs) {
    out.reports.push_back(xi_report(x));
    out.agree = out.agree && out.reports.back().xi == out.reports[0].xi;
  }
  return out;
}

std::string to_json(const XiReport& r) {
  nlohmann::json j;
  j["p"] = r.p;
  j["quad_term"] = to_string(r.quad_term);
  j["sigma_W"] = r.sigma_W;
  j["tl_term"] = r.tl_term;
  j["xi"] = to_string(r.xi);
  j["integral"] = r.integral;
  j["beta_used"] = r.beta_used;
  j["w_classes"] = r.w_classes;
  auto passes = nlohmann::json::array();
  for (auto& b : r.beta_word) passes.push_back({{"band", b.band}, {"dir", b.dir}, {"slot", b.slot}});
  j["beta_word"] = passes;
  auto A = nlohmann::json::array();
  for (int i = 0; i < r.A.rows; ++i) {
    auto row = nlohmann::json::array();
    for (int k = 0; k < r.A.cols; ++k) row.push_back(to_string(r.A(i, k)));
    A.push_back(row);
  }
  j["A"] = A;
  j["rank"] = r.rank;
  j["nullity"] = r.nullity;
  return j.dump();
}

}  // namespace dih
