#pragma once
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "dihedral/diagram.hpp"
#include "dihedral/dihedral.hpp"
#include "dihedral/exact.hpp"

namespace dih {

// column-sparse integer matrix: col[c] lists (row, value), rows ascending
struct SparseMat {
  int rows = 0, cols = 0;
  std::vector<std::vector<std::pair<int, long>>> col;
  SparseMat() = default;
  SparseMat(int r, int c) : rows(r), cols(c), col(c) {}
  void add(int r, int c, long v);
  void normalize();  // merge duplicates, drop zeros
  IMat dense() const;
  long nnz() const;
};
// true iff A*B == 0
bool product_is_zero(const SparseMat& A, const SparseMat& B);

// Cone cell structure on S^3 and its lifts. d[k] : C_k -> C_{k-1}, with
// columns indexed by k-cells (d[0] is unused).
struct CellComplex {
  std::array<int, 4> cells{};
  std::array<SparseMat, 4> d;
  std::array<std::vector<std::string>, 4> labels;
  int euler() const { return cells[0] - cells[1] + cells[2] - cells[3]; }
};

// A component of the preimage of one diagram component.
struct LiftedCurve {
  int component = 0;
  int index = 1;  // branching index: size of the meridian orbit
  std::vector<int> arcs;                     // 1-cells, each once, in traversal order
  std::vector<std::pair<int, int>> pushoff;  // (arc, sheet) pieces of the lifted push-off
  QVec chain(int n1) const;
};

struct CoverComplex : CellComplex {
  KnotDiagram diagram;  // after the kink substitution for crossing-free input
  PermRep rep;
  int sheets = 1;
  // cell lookup by base cell and sheet (left sheet for arcs/curtains, NE sheet at crossings)
  std::vector<std::vector<int>> arc_cell, r_cell, u_cell, curtain;
  std::vector<int> p_cell, e_cell;
  std::vector<LiftedCurve> curves;
};

CoverComplex lift(const KnotDiagram& d, const PermRep& rep);
CellComplex base_complex(const KnotDiagram& d);

// homology of the cover in dimension 0..3 (dense Smith normal form)
Homology cover_homology(const CellComplex& cc, int dim);

// curves sorted by (component, first arc)
const std::vector<LiftedCurve>& branch_curves(const CoverComplex& cc);

// x with d2 x = cycle over Q. seed != 0 permutes the pivot order.
QVec bounding_chain(const CellComplex& cc, const QVec& cycle, unsigned seed = 0);

// integer combination of lifted curves, as (curve id, coefficient)
using CurveCombo = std::vector<std::pair<int, long>>;

struct LinkingResult {
  Rat value;
  QVec certificate;  // bounding chain of the second cycle
};

// lk(a, b) by intersecting the push-off of a with a chain bounded by b.
// The curves in a and b must be distinct.
LinkingResult linking(const CoverComplex& cc, const CurveCombo& a, const CurveCombo& b, unsigned seed = 0);
// intersection of the push-off of a with a 2-chain
Rat intersect_pushoff(const CoverComplex& cc, const CurveCombo& a, const QVec& chain2);

// writhe of the crossings of a diagram component with itself
int self_writhe(const KnotDiagram& d, int component);

// lk(a, a pushed off with the given framing of each base component), for
// combinations of index-1 curves
Rat self_linking(const CoverComplex& cc, const CurveCombo& a, const std::vector<int>& framing, unsigned seed = 0);

}  // namespace dih
