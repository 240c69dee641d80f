#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "dihedral/corpus.hpp"
#include "dihedral/cover_complex.hpp"
#include "dihedral/dihedral.hpp"
#include "dihedral/errors.hpp"
#include "dihedral/predict.hpp"
#include "dihedral/signatures.hpp"
#include "dihedral/twobridge_slice.hpp"
#include "dihedral/xi.hpp"
#include "mpfr_oracle.hpp"
#include "oracles.hpp"

using namespace dih;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// wall-clock limits in seconds
constexpr double limit[10] = {0, 10, 1, 1, 30, 60, 120, 1, 10, 5};

std::string str(const Rat& r) { return r.get_str(); }
std::string str(const HomologyClass& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}
long mod(long x, long p) { return ((x % p) + p) % p; }

PermRep first_rep(const KnotDiagram& d, long p) {
  for (auto& c : fox_colorings(d, p))
    if (c.nontrivial()) return coloring_to_rep(c);
  throw InvalidInput("no dihedral rep");
}
Int order(const Homology& h) {
  Int o = 1;
  for (auto& t : h.torsion) o *= t;
  return h.free_rank ? Int(0) : o;
}
KnotDiagram family_diagram(const FamilyPoint& pt) {
  return pt.family == Family::K1 ? build_K1(pt.a, pt.b) : build_K2(pt.a, pt.b);
}
IMat family_form(const FamilyPoint& pt) { return symmetrize(seifert_matrix_C(family_spec(pt)).L); }

// the four admissible residue cases at p = 3 and their classes
struct Case {
  Family f;
  long a, b;
  HomologyClass beta;
};
const std::vector<Case> cases = {{Family::K1, 0, 2, {1, 0, 1, 1, -1, 1}},
                                 {Family::K1, 1, 1, {-1, 1, 1, 0, 1, 1}},
                                 {Family::K2, 0, 1, {1, 0, 1, -1, 1, 1}},
                                 {Family::K2, 1, 0, {-1, 1, 1, 1, 0, 1}}};
const Case* case_of(const FamilyPoint& pt) {
  for (auto& c : cases)
    if (c.f == pt.family && mod(pt.a, 3) == c.a && mod(pt.b, 3) == c.b) return &c;
  return nullptr;
}
std::vector<FamilyPoint> grid(long bound) {
  std::vector<FamilyPoint> out;
  for (Family f : {Family::K1, Family::K2})
    for (long a = -bound; a <= bound; ++a)
      for (long b = -bound; b <= bound; ++b)
        if (a && b) out.push_back({f, a, b});
  return out;
}

Outcome admissibility_table() {
  int rows = 0, bad = 0;
  std::string first;
  for (auto& pt : grid(6)) {
    bool expect = case_of(pt) != nullptr;
    auto got = p3_admissible(pt);
    bool fox = admits_dihedral_cover(family_diagram(pt), 3);
    ++rows;
    if (got.admissible != expect || fox != expect) {
      if (!bad++)
        first = family_name(pt.family) + "(" + std::to_string(pt.a) + "," + std::to_string(pt.b) + ")";
    }
  }
  return {bad == 0, std::to_string(rows) + " points, " + std::to_string(bad) + " mismatches" +
                        (bad ? ", first " + first : "")};
}

Outcome determinants() {
  int bad[2] = {0, 0}, total = 0;
  std::string first[2];
  for (auto& pt : grid(10)) {
    auto [f, a, b] = pt;
    Int d = det(family_form(pt));
    Int x = f == Family::K1 ? Int(8 * a * b + 2 * b - 1) : Int(8 * a * b + 2 * a + 2 * b + 1);
    Int want = f == Family::K1 ? Int(-x * x) : Int(x * x);
    ++total;
    int i = f == Family::K1 ? 0 : 1;
    if (d != want && !bad[i]++)
      first[i] = family_name(f) + "(" + std::to_string(a) + "," + std::to_string(b) + "): " + d.get_str() + " vs " +
                 want.get_str();
  }
  std::string s = std::to_string(total) + " points; K1 mismatches " + std::to_string(bad[0]) + ", K2 mismatches " +
                  std::to_string(bad[1]);
  for (auto& f : first)
    if (!f.empty()) s += "; e.g. " + f;
  return {bad[0] + bad[1] == 0, s};
}

Outcome characteristic() {
  int admissible = 0, bad = 0;
  std::string first;
  for (auto& pt : grid(6)) {
    auto* c = case_of(pt);
    if (!c) continue;
    ++admissible;
    IMat LV = family_form(pt);
    auto cls = characteristic_classes(LV, 3);
    bool ok = cls.size() == 1 && same_class_mod(cls[0], c->beta, 3) &&
              same_class_mod(p3_characteristic_class(pt), c->beta, 3);
    // kernel of LV mod 3 by brute force over (Z/3)^6
    int kernel = 0;
    bool on_line = true;
    std::vector<long> v(6, 0);
    for (int code = 1; code < 729; ++code) {
      for (int i = 0, x = code; i < 6; ++i, x /= 3) v[i] = x % 3;
      bool zero = true;
      for (int i = 0; i < 6 && zero; ++i) {
        long s = 0;
        for (int j = 0; j < 6; ++j) s += mod(LV(i, j).get_si(), 3) * v[j];
        zero = s % 3 == 0;
      }
      if (!zero) continue;
      ++kernel;
      on_line = on_line && same_class_mod(v, c->beta, 3);
    }
    ok = ok && kernel == 2 && on_line;
    if (!ok && !bad++)
      first = family_name(pt.family) + "(" + std::to_string(pt.a) + "," + std::to_string(pt.b) + ")";
  }
  return {bad == 0, std::to_string(admissible) + " admissible points, " + std::to_string(bad) + " mismatches" +
                        (bad ? ", first " + first : "")};
}

std::vector<CellComplex> built;

Outcome cover_homology_suite() {
  std::string s;
  bool ok = true;
  for (auto [name, det] : std::vector<std::pair<std::string, long>>{{"trefoil", 3}, {"figure-eight", 5}, {"6_1", 9}}) {
    auto& d = corpus_entry(name).diagram;
    auto cc = lift(d, two_fold_rep(d));
    Int o = order(cover_homology(cc, 1));
    ok = ok && o == det;
    s += name + " |H1|=" + o.get_str() + " ";
    built.push_back(cc);
  }
  int n3 = 0;
  for (auto& k : corpus()) {
    if (k.pattern.empty() || k.name == "unknot" || !admits_dihedral_cover(k.diagram, 3)) continue;
    auto cc = lift(k.diagram, first_rep(k.diagram, 3));
    auto h = cover_homology(cc, 1);
    bool trivial = h.free_rank == 0 && h.torsion.empty();
    ok = ok && trivial;
    ++n3;
    s += k.name + (trivial ? " H1=0 " : " H1!=0 ");
    built.push_back(cc);
  }
  return {ok && n3 >= 4, s + "(" + std::to_string(n3) + " three-fold covers)"};
}

Outcome engine() {
  bool ok = true;
  int complexes = 0, pairs = 0;
  auto dd = [&](const CellComplex& cc) {
    ok = ok && product_is_zero(cc.d[1], cc.d[2]) && product_is_zero(cc.d[2], cc.d[3]);
    ++complexes;
  };
  for (auto& cc : built) dd(cc);
  for (auto& k : corpus()) dd(base_complex(k.diagram));
  for (const char* name : {"trefoil", "6_1", "K1(1,1)", "K1(3,2)", "K2(3,1)"}) {
    auto& d = corpus_entry(name).diagram;
    auto cc = lift(d, first_rep(d, 3));
    dd(cc);
    int C = int(branch_curves(cc).size());
    for (int i = 0; i < C; ++i)
      for (int j = 0; j < C; ++j) {
        if (i == j) continue;
        Rat v = linking(cc, {{i, 1}}, {{j, 1}}).value;
        for (unsigned seed : {1u, 7u, 12345u}) ok = ok && linking(cc, {{i, 1}}, {{j, 1}}, seed).value == v;
        ++pairs;
      }
  }
  auto& t = corpus_entry("trefoil").diagram;
  auto cc = lift(t, first_rep(t, 3));
  auto L = oracle::presentation_linking(cc);
  int C = int(branch_curves(cc).size());
  bool oracle_ok = true;
  for (int i = 0; i < C; ++i)
    for (int j = 0; j < C; ++j) {
      if (i != j) {
        oracle_ok = oracle_ok && linking(cc, {{i, 1}}, {{j, 1}}).value == L(i, j);
      } else if (branch_curves(cc)[i].index == 1) {
        std::vector<int> fr;
        for (int c = 0; c < int(components(cc.diagram).size()); ++c) fr.push_back(self_writhe(cc.diagram, c));
        oracle_ok = oracle_ok && self_linking(cc, {{i, 1}}, fr) == L(i, i);
      }
    }
  std::string lk = C == 2 ? str(L(0, 1)) : "?";
  return {ok && oracle_ok, std::to_string(complexes) + " complexes with dd=0, " + std::to_string(pairs) +
                               " linking pairs stable under reseeding, trefoil lk=" + lk +
                               (oracle_ok ? " matches oracle" : " differs from oracle")};
}

XiInput xi_input(const std::vector<int>& e, const HomologyClass& beta, int realization, int side = 1) {
  XiInput in;
  in.e = e;
  in.beta = beta;
  in.p = 3;
  in.side = side;
  auto rs = realizations(plumbed_surface(e), beta, {}, realization + 1);
  if (int(rs.size()) <= realization) throw Inconsistency("too few realizations of " + str(beta));
  in.beta_word = rs[realization];
  return in;
}

Outcome xi_invariance() {
  struct Example {
    std::string name;
    std::vector<int> e;
    HomologyClass beta;
    int second;
  };
  std::vector<Example> ex = {{"trefoil", {2, -2}, {1, -1}, 2},
                             {"K1(1,1)", K1_spec(1, 1), {-1, 1, 1, 0, 1, 1}, 1},
                             {"K1(3,2)", K1_spec(3, 2), {1, 0, 1, 1, -1, 1}, 2}};
  bool ok = true;
  std::string s;
  for (auto& x : ex) {
    auto inv = xi_invariance_check({xi_input(x.e, x.beta, 0), xi_input(x.e, x.beta, x.second)});
    bool integral = true;
    for (auto& r : inv.reports) integral = integral && r.integral;
    ok = ok && inv.agree && integral;
    s += x.name + " xi=" + str(inv.reports[0].xi) + (inv.agree ? " agrees" : " differs") +
         (integral ? "" : " non-integral") + "; ";
  }
  return {ok, s + "two realizations each"};
}

Outcome formulas() {
  BaseData s4{0, 2, true};
  BranchData sphere{2, 0, {-1}};
  long chi = euler_of_cover(3, s4, sphere), sigma = signature_of_cover(3, s4, sphere);
  bool ok = chi == 3 && sigma == 1;
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> v(-50, 50), pi(1, 10), kk(0, 3);
  int bad = 0;
  for (int t = 0; t < 1000; ++t) {
    long p = 2 * pi(rng) + 1;
    auto draw = [&] {
      BaseData b{v(rng), v(rng), true};
      BranchData r{v(rng), 4 * v(rng), {}};
      for (long i = kk(rng); i > 0; --i) r.xi.push_back(v(rng));
      return std::pair{b, r};
    };
    auto [b1, r1] = draw();
    auto [b2, r2] = draw();
    BaseData b{b1.sigma_X + b2.sigma_X, b1.chi_X + b2.chi_X, true};
    BranchData r{r1.chi_B + r2.chi_B, r1.e_B + r2.e_B, r1.xi};
    r.xi.insert(r.xi.end(), r2.xi.begin(), r2.xi.end());
    if (euler_of_cover(p, b, r) != euler_of_cover(p, b1, r1) + euler_of_cover(p, b2, r2) ||
        signature_of_cover_exact(p, b, r) != signature_of_cover_exact(p, b1, r1) + signature_of_cover_exact(p, b2, r2))
      ++bad;
  }
  return {ok && bad == 0, "chi=" + std::to_string(chi) + " sigma=" + std::to_string(sigma) + ", " +
                              std::to_string(bad) + "/1000 linearity failures"};
}

IMat random_unimodular(int n, std::mt19937& rng) {
  IMat P = IMat::identity(n);
  std::uniform_int_distribution<int> idx(0, n - 1), c(-2, 2);
  for (int s = 0; s < 3 * n; ++s) {
    int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    int k = c(rng);
    for (int r = 0; r < n; ++r) P(r, i) += k * P(r, j);
  }
  return P;
}
IMat random_seifert(int g, std::mt19937& rng) {
  int n = 2 * g;
  std::uniform_int_distribution<int> coef(-3, 3);
  IMat L(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) L(i, j) = L(j, i) = coef(rng);
  for (int i = 0; i < n; i += 2) L(i, i + 1) += 1;
  IMat P = random_unimodular(n, rng);
  return mul(mul(P.transpose(), L), P);
}

Outcome tristram_levine() {
  std::mt19937 rng(5);
  int bad = 0, checked = 0;
  for (int t = 0; t < 100; ++t) {
    IMat L = random_seifert(1 + t % 3, rng);
    long p = std::vector<long>{3, 5, 7, 11}[t % 4];
    for (long k = 1; k < p; ++k) {
      bool s1 = false, s2 = false;
      int a = 0, b = 0;
      try {
        a = tl_signature(L, p, k);
      } catch (const SingularForm&) {
        s1 = true;
      }
      try {
        b = tl_signature(L, p, p - k);
      } catch (const SingularForm&) {
        s2 = true;
      }
      ++checked;
      if (s1 != s2 || a != b) ++bad;
    }
  }
  auto& L = *corpus_entry("trefoil").seifert;
  auto sig = tl_signatures(L, 3);
  bool ok = sig.at(1) == -2 && sig.at(2) == -2;
  std::string fl;
  for (long k : {1, 2}) {
    auto [s, gap] = oracle::tl_float(L, 3, k);
    ok = ok && s == sig.at(k) && gap > oracle::Real("1e-50");
    fl += (k == 1 ? "" : ",") + std::to_string(s);
  }
  return {ok && bad == 0, std::to_string(bad) + "/" + std::to_string(checked) + " symmetry failures; trefoil (" +
                              std::to_string(sig.at(1)) + "," + std::to_string(sig.at(2)) + ") float (" + fl + ")"};
}

long inv_mod(long x, long p) {
  for (long y = 1; y < p; ++y)
    if (mod(x * y, p) == 1) return y;
  throw InvalidInput("not invertible");
}

Outcome witnesses() {
  int primes = 0, missing = 0;
  std::string first;
  for (long p = 3; p <= 23; p += 2) {
    if (!is_prime(p)) continue;
    ++primes;
    auto all = enumerate_admissible(p, p);
    auto has = [&](FamilyPoint pt) {
      for (auto& x : all)
        if (x.pt == pt) return true;
      return false;
    };
    std::vector<FamilyPoint> want = {{Family::K1, p, inv_mod(2, p)}, {Family::K1, inv_mod(8, p), 0}};
    if (p > 3) {
      want[1].b = inv_mod(3, p);
      want.push_back({Family::K2, inv_mod(mod(-6, p), p), p - 1});
    } else {
      want.pop_back();  // 3 is not a unit mod 3
    }
    for (auto& pt : want)
      if (!has(pt) && !missing++)
        first = "p=" + std::to_string(p) + " " + family_name(pt.family) + "(" + std::to_string(pt.a) + "," +
                std::to_string(pt.b) + ")";
  }
  return {missing == 0, std::to_string(primes) + " primes, " + std::to_string(missing) + " missing witnesses" +
                            (missing ? ", first " + first : "")};
}

}  // namespace

int main(int argc, char** argv) {
  bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"admissibility table", admissibility_table}, {"determinant closed forms", determinants},
      {"characteristic classes", characteristic}, {"cover homology", cover_homology_suite},
      {"linking engine", engine},               {"xi invariance", xi_invariance},
      {"cover formulas", formulas},             {"Tristram-Levine signatures", tristram_levine},
      {"slice witnesses", witnesses}};
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = s < limit[i + 1];
    bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("criterion %zu %s: %s (%s; %.2fs, limit %.0fs%s)\n", i + 1, criteria[i].first.c_str(),
                pass ? "PASS" : "FAIL", o.detail.c_str(), s, limit[i + 1], in_time ? "" : ", over time");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria pass\n", int(criteria.size()) - failed, criteria.size());
  return strict && failed ? 1 : 0;
}
