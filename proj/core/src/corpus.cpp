#include "dihedral/corpus.hpp"

#include "dihedral/errors.hpp"
#include "dihedral/seifert.hpp"

namespace dih {

namespace {

CorpusEntry two_bridge(std::string name, std::vector<int> e, long det) {
  return {std::move(name), build_two_bridge(e), seifert_matrix_C(e).L, e, det};
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> v;
    v.push_back({"unknot", KnotDiagram{1, {}, {}}, IMat(0, 0), {}, 1});
    v.push_back(two_bridge("trefoil", {2, -2}, 3));
    v.push_back(two_bridge("figure-eight", {2, 2}, 5));
    v.push_back(two_bridge("6_1", {4, 2}, 9));
    v.push_back(two_bridge("K1(1,1)", K1_spec(1, 1), 81));
    v.push_back(two_bridge("K1(3,2)", K1_spec(3, 2), 2601));
    v.push_back(two_bridge("K2(1,1)", K2_spec(1, 1), 169));
    v.push_back(two_bridge("K2(3,1)", K2_spec(3, 1), 1089));
    return v;
  }();
  return entries;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  for (auto& c : corpus())
    if (c.name == name) return c;
  throw InvalidInput("unknown corpus knot: " + name);
}

}  // namespace dih
