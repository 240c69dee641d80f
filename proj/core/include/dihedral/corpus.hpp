#pragma once
#include <optional>
#include <string>
#include <vector>

#include "dihedral/diagram.hpp"
#include "dihedral/exact.hpp"

namespace dih {

struct CorpusEntry {
  std::string name;
  KnotDiagram diagram;
  std::optional<IMat> seifert;
  std::vector<int> pattern;  // two-bridge pattern e, when the diagram is its plat
  long determinant = 1;
};

// unknot, trefoil, figure-eight, 6_1 and K1/K2 samples
const std::vector<CorpusEntry>& corpus();
// throws InvalidInput for unknown names
const CorpusEntry& corpus_entry(const std::string& name);

}  // namespace dih
