#pragma once
#include <optional>
#include <vector>

#include "dihedral/diagram.hpp"
#include "dihedral/exact.hpp"

namespace dih {

struct FoxColoring {
  long p = 3;
  std::vector<long> color;  // per arc, in [0, p)
  bool nontrivial() const;
  bool operator==(const FoxColoring&) const = default;
};

// Any arc -> S_n assignment. perm[a][x] is the image of sheet x.
struct PermRep {
  int degree = 1;
  std::vector<std::vector<int>> perm;
};

// Pseudo arcs (mask true) carry no color: crossings under them keep the
// color, crossings over them impose nothing on pseudo arcs. Colors on
// pseudo arcs are reported as 0.
std::vector<FoxColoring> fox_colorings(const KnotDiagram& d, long p, const std::vector<bool>& pseudo = {});
// log_p of the count of colorings, i.e. the nullity of the coloring matrix (p prime)
int coloring_nullity(const KnotDiagram& d, long p, const std::vector<bool>& pseudo = {});

struct ColoringOrbit {
  std::vector<long> representative;  // lexicographically least
  long size = 0;
};
// nontrivial colorings grouped under x -> ux + v, u a unit mod p
std::vector<ColoringOrbit> coloring_orbits(const std::vector<FoxColoring>& cs);

bool admits_dihedral_cover(const KnotDiagram& d, long p);

// |Delta(-1)|: from L + L^T when given, otherwise |H_1| of the 2-fold
// branched cover. With both routes available they are compared.
Int determinant(const KnotDiagram& d, const std::optional<IMat>& seifert = std::nullopt);

// Alexander polynomial of a knot diagram from the Fox matrix, coefficients of
// t^0, t^1, ...; normalized to a nonzero constant term and Delta(1) = 1
std::vector<Int> alexander_polynomial(const KnotDiagram& d);
// same, from a Seifert matrix: det(L - t L^T)
std::vector<Int> alexander_polynomial(const IMat& L);

PermRep coloring_to_rep(const FoxColoring& c, const std::vector<bool>& pseudo = {});
PermRep two_fold_rep(const KnotDiagram& d);
PermRep trivial_rep(const KnotDiagram& d, int degree = 1);

// checks every crossing relation; throws Inconsistency on violation
void check_rep(const KnotDiagram& d, const PermRep& r);
bool transitive(const PermRep& r);
// cycle lengths of a permutation, descending
std::vector<int> cycle_type(const std::vector<int>& perm);

std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g);  // f after g
std::vector<int> inverse(const std::vector<int>& f);

}  // namespace dih
