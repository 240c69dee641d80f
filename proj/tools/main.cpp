#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dihedral/corpus.hpp"
#include "dihedral/cover_complex.hpp"
#include "dihedral/dihedral.hpp"
#include "dihedral/errors.hpp"
#include "dihedral/predict.hpp"
#include "dihedral/seifert.hpp"
#include "dihedral/signatures.hpp"
#include "dihedral/twobridge_slice.hpp"
#include "dihedral/xi.hpp"
#include "json.hpp"

using namespace dih;
using nlohmann::json;

namespace {

const int kUsage = 64, kInput = 65, kMath = 70;

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidInput("cannot read " + path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(slurp(path));
  } catch (const json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

IMat matrix_from_json(const json& j) {
  require(j.is_array(), "a matrix is an array of rows");
  int n = int(j.size());
  IMat M(n, n);
  for (int i = 0; i < n; ++i) {
    require(j[i].is_array() && int(j[i].size()) == n, "matrix must be square");
    for (int k = 0; k < n; ++k) M(i, k) = j[i][k].get<long>();
  }
  return M;
}

// a knot given as corpus:NAME, or a JSON file: a diagram, or {"pattern": e}
struct Knot {
  KnotDiagram diagram;
  std::optional<IMat> seifert;
  std::vector<int> pattern;
};

Knot load_knot(const std::string& arg) {
  if (arg.rfind("corpus:", 0) == 0) {
    auto& c = corpus_entry(arg.substr(7));
    return {c.diagram, c.seifert, c.pattern};
  }
  auto j = read_json(arg);
  Knot k;
  if (j.contains("pattern")) {
    k.pattern = j["pattern"].get<std::vector<int>>();
    k.diagram = build_two_bridge(k.pattern);
    k.seifert = seifert_matrix_C(k.pattern).L;
  } else {
    k.diagram = diagram_from_json(j.dump());
  }
  if (j.contains("seifert")) k.seifert = matrix_from_json(j["seifert"]);
  return k;
}

IMat load_seifert(const std::string& arg) {
  if (arg.rfind("corpus:", 0) == 0) {
    auto k = load_knot(arg);
    if (!k.seifert) throw InvalidInput("no Seifert matrix stored for " + arg);
    return *k.seifert;
  }
  auto j = read_json(arg);
  return matrix_from_json(j.is_object() ? j.at("seifert") : j);
}

PermRep load_rep(const std::string& path, const KnotDiagram& d, long p) {
  auto j = read_json(path);
  if (j.contains("coloring")) {
    FoxColoring c;
    c.p = p;
    c.color = j["coloring"].get<std::vector<long>>();
    require(int(c.color.size()) == d.arcs, "one color per arc");
    return coloring_to_rep(c, j.value("pseudo", std::vector<bool>{}));
  }
  PermRep r;
  r.perm = j.at("perm").get<std::vector<std::vector<int>>>();
  require(!r.perm.empty(), "empty representation");
  r.degree = int(r.perm[0].size());
  return r;
}

json colorings_cmd(long p, const Knot& k) {
  auto cs = fox_colorings(k.diagram, p);
  json orbits = json::array();
  for (auto& o : coloring_orbits(cs)) orbits.push_back(o.representative);
  return {{"count", cs.size()}, {"orbits", orbits}};
}

json det_cmd(const Knot& k) { return {{"determinant", determinant(k.diagram, k.seifert).get_si()}}; }

json charknots_cmd(long p, const IMat& L) {
  IMat LV = symmetrize(L);
  json out = json::array();
  for (auto& b : characteristic_classes(LV, p)) out.push_back({{"class", b}, {"L_V", quad_form(LV, b).get_si()}});
  return {{"p", p}, {"classes", out}};
}

json tl_cmd(long p, const IMat& L) {
  json sig = json::object();
  int sum = 0;
  for (auto [k, s] : tl_signatures(L, p)) sig[std::to_string(k)] = s, sum += s;
  return {{"p", p}, {"signatures", sig}, {"sum", sum}};
}

json linking_cmd(long p, const Knot& k, const std::string& rep_file) {
  PermRep rep;
  if (!rep_file.empty()) {
    rep = load_rep(rep_file, k.diagram, p);
  } else {
    auto cs = fox_colorings(k.diagram, p);
    auto it = std::find_if(cs.begin(), cs.end(), [](auto& c) { return c.nontrivial(); });
    if (it == cs.end()) throw InvalidInput("the knot has no dihedral coloring mod p");
    rep = coloring_to_rep(*it);
  }
  check_rep(k.diagram, rep);
  auto cc = lift(k.diagram, rep);
  auto& curves = branch_curves(cc);
  json cj = json::array();
  for (auto& c : curves) cj.push_back({{"component", c.component}, {"index", c.index}, {"first_arc", c.arcs.front()}});
  int n = int(curves.size());
  std::vector<int> ids;
  for (auto& c : curves)
    for (int id = 0; id < int(cc.curves.size()); ++id)
      if (&cc.curves[id] == &c) ids.push_back(id);
  json M = json::array();
  for (int a = 0; a < n; ++a) {
    json row = json::array();
    for (int b = 0; b < n; ++b) {
      if (a != b) {
        row.push_back(to_string(linking(cc, {{ids[a], 1}}, {{ids[b], 1}}).value));
      } else if (curves[a].index == 1) {
        row.push_back(to_string(self_linking(cc, {{ids[a], 1}}, std::vector<int>(components(cc.diagram).size(), 0))));
      } else {
        row.push_back(nullptr);
      }
    }
    M.push_back(row);
  }
  return {{"p", p}, {"curves", cj}, {"linking", M}};
}

json xi_cmd(long p, const Knot& k, const std::string& beta_file) {
  if (k.pattern.empty()) throw InvalidInput("xi needs a two-bridge pattern (corpus knot or {\"pattern\": ...})");
  auto j = read_json(beta_file);
  XiInput in;
  in.e = k.pattern;
  in.p = p;
  in.beta = j.at("beta").get<HomologyClass>();
  in.side = j.value("side", 1);
  if (j.contains("word"))
    for (auto& b : j["word"]) in.beta_word.push_back({b.at("band").get<int>(), b.at("dir").get<int>(), b.value("slot", 0.0)});
  if (j.contains("seifert")) in.beta_seifert = matrix_from_json(j["seifert"]);
  return json::parse(to_json(xi_report(in)));
}

json predict_cmd(long p, long sx, long cx, long cb, long eb, const std::vector<long>& xi, bool even) {
  BaseData base{sx, cx, true};
  BranchData br{cb, eb, xi};
  long sigma = signature_of_cover(p, base, br);
  long chi = euler_of_cover(p, base, br);
  auto f = intersection_form_descriptor(sigma, chi, !even);
  return {{"sigma_Y", sigma},
          {"chi_Y", chi},
          {"rank", f.rank},
          {"descriptor", {{"kind", to_string(f.kind)}, {"odd", f.odd}, {"normal_form", f.normal_form}}}};
}

json enumerate_cmd(long p, long bound) {
  json out = json::array();
  for (auto& a : enumerate_admissible(p, bound))
    out.push_back({{"family", family_name(a.pt.family)}, {"a", a.pt.a}, {"b", a.pt.b}, {"det", a.det.get_str()}, {"case", a.tag}});
  return out;
}

json admissibility_cmd(long p, long bound) {
  require(p == 3, "the admissibility table is for p = 3");
  json rows = json::array();
  bool agree = true;
  for (Family f : {Family::K1, Family::K2})
    for (long a = -bound; a <= bound; ++a)
      for (long b = -bound; b <= bound; ++b) {
        if (!a || !b) continue;
        FamilyPoint pt{f, a, b};
        auto c = p3_admissible(pt);
        bool fox = admits_dihedral_cover(build_two_bridge(family_spec(pt)), 3);
        agree = agree && fox == c.admissible;
        json row{{"family", family_name(f)}, {"a", a}, {"b", b}, {"det", det_closed_form(pt).get_str()},
                 {"admissible", c.admissible}, {"fox", fox}, {"case", c.tag}};
        if (c.admissible) row["class"] = p3_characteristic_class(pt);
        rows.push_back(row);
      }
  return {{"p", p}, {"bound", bound}, {"agree", agree}, {"rows", rows}};
}

json corpus_list() {
  json out = json::array();
  for (auto& c : corpus()) {
    json e{{"name", c.name}, {"determinant", c.determinant}, {"crossings", c.diagram.crossings.size()}};
    if (!c.pattern.empty()) e["pattern"] = c.pattern;
    out.push_back(e);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dihedral branched covers of knots"};
  app.set_help_all_flag("--help-all");
  bool list = false;
  app.add_flag("--corpus", list, "list the bundled knots");
  long p = 3, bound = 6, sx = 0, cx = 2, cb = 2, eb = 0;
  std::string knot, file, rep, beta, xis;
  bool even = false;

  auto* col = app.add_subcommand("colorings", "Fox colorings mod p and their orbits");
  col->add_option("--p", p)->required();
  col->add_option("DIAGRAM", knot)->required();
  auto* det = app.add_subcommand("det", "knot determinant");
  det->add_option("DIAGRAM", knot)->required();
  auto* chk = app.add_subcommand("charknots", "characteristic classes mod p of a Seifert matrix");
  chk->add_option("--p", p)->required();
  chk->add_option("SEIFERT", file)->required();
  auto* tl = app.add_subcommand("tl", "Tristram-Levine signatures at p-th roots of unity");
  tl->add_option("--p", p)->required();
  tl->add_option("SEIFERT", file)->required();
  auto* lk = app.add_subcommand("linking", "linking matrix of branch curves in a dihedral cover");
  lk->add_option("--p", p)->required();
  lk->add_option("--rep", rep);
  lk->add_option("DIAGRAM", knot)->required();
  auto* xi = app.add_subcommand("xi", "signature defect of a characteristic class");
  xi->add_option("--p", p)->required();
  xi->add_option("--beta", beta)->required();
  xi->add_option("DIAGRAM", knot)->required();
  auto* pr = app.add_subcommand("predict", "signature and Euler characteristic of a dihedral cover");
  pr->add_option("--p", p)->required();
  pr->add_option("--sigma-x", sx);
  pr->add_option("--chi-x", cx);
  pr->add_option("--chi-b", cb);
  pr->add_option("--e-b", eb);
  pr->add_option("--xi", xis, "comma-separated defects");
  pr->add_flag("--even", even, "the intersection form is even");
  auto* en = app.add_subcommand("enumerate-slice", "family points with p | det");
  en->add_option("--p", p)->required();
  en->add_option("--bound", bound);
  auto* ap = app.add_subcommand("reproduce-appendix-a", "p = 3 admissibility table");
  ap->add_option("--p", p);
  ap->add_option("--bound", bound);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    json out;
    if (list) out = corpus_list();
    else if (*col) out = colorings_cmd(p, load_knot(knot));
    else if (*det) out = det_cmd(load_knot(knot));
    else if (*chk) out = charknots_cmd(p, load_seifert(file));
    else if (*tl) out = tl_cmd(p, load_seifert(file));
    else if (*lk) out = linking_cmd(p, load_knot(knot), rep);
    else if (*xi) out = xi_cmd(p, load_knot(knot), beta);
    else if (*pr) {
      std::vector<long> v;
      std::stringstream s(xis);
      for (std::string t; std::getline(s, t, ',');)
        if (!t.empty()) v.push_back(std::stol(t));
      out = predict_cmd(p, sx, cx, cb, eb, v, even);
    } else if (*en) out = enumerate_cmd(p, bound);
    else if (*ap) out = admissibility_cmd(p, bound);
    else {
      std::cerr << app.help();
      return kUsage;
    }
    std::cout << out.dump() << "\n";
    return 0;
  } catch (const SingularForm& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInput;
  } catch (const json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return kMath;
  }
}
