#pragma once
#include <optional>
#include <string>
#include <vector>

#include "dihedral/cover_complex.hpp"
#include "dihedral/exact.hpp"
#include "dihedral/seifert.hpp"
#include "dihedral/surface.hpp"

namespace dih {

// A singularity given as the boundary of the plumbed surface of C(e) with a
// characteristic class beta on it.
struct XiInput {
  std::vector<int> e;
  HomologyClass beta;
  long p = 3;
  SurfaceWord beta_word;                 // empty: first realization found
  std::vector<SurfaceWord> w_words;      // empty: searched
  std::optional<IMat> beta_seifert;      // Seifert matrix of beta as a knot; none: must be Alexander-trivial
  int side = 1;                          // side of beta its parallel copies are taken on
};

// Curves on the surface whose lifts span the kernel used for W(alpha, beta):
// w^1..w^r (r = 2g - 2) in the complement of beta, and a parallel copy of beta.
// Each basic element is c^+ on one sheet minus c^- on the partner sheet.
struct BasisCurveSet {
  SurfaceWord beta_word;
  std::vector<SurfaceWord> w_words;
  std::vector<HomologyClass> w_classes;
  SurfaceWord beta_copy;
  int r = 0;
  std::vector<std::string> element_labels;  // "w1[0]", ..., "beta[0]": curve and sheet
  size_t size() const { return element_labels.size(); }
};

// classes w in {-1,0,1}^n with w.beta = 0, independent of beta and of each
// other, with embedded realizations disjoint from beta
BasisCurveSet basis_curves(const PlumbedSurface& S, const IMat& L, const HomologyClass& beta, long p,
                           const SurfaceWord& beta_word, std::vector<SurfaceWord> w_words = {}, int side = 1);

struct LinkingMatrix {
  QMat A;
  BasisCurveSet basis;
  int crossings = 0;  // in the projected link of alpha and all curve copies
  FoxColoring coloring;
  // the lifted link; element a is elements[a], its framing copy framed[a]
  CoverComplex cover;
  std::vector<CurveCombo> elements, framed;
};
// linking numbers in the dihedral cover determined by beta
LinkingMatrix linking_matrix_A(const XiInput& in);

struct XiReport {
  long p = 3;
  Rat quad_term;
  int sigma_W = 0;
  int tl_term = 0;
  Rat xi;
  bool integral = false;
  HomologyClass beta_used;
  SurfaceWord beta_word;
  std::vector<HomologyClass> w_classes;
  QMat A;
  int rank = 0, nullity = 0;
};
// (p^2 - 1)/(6p) L_V(beta, beta) + signature(A) + tl_term
XiReport xi_from_terms(long p, const Int& lv_beta_beta, const QMat& A, int tl_term);
// all three terms; never throws on a non-integral sum
XiReport xi_report(const XiInput& in);
// same, raising Inconsistency when the sum is not an integer
XiReport xi_p(const XiInput& in);

struct InvarianceResult {
  bool agree = false;
  std::vector<XiReport> reports;
};
// all inputs must share e, p and the mod-p line of beta
InvarianceResult xi_invariance_check(const std::vector<XiInput>& inputs);

std::string to_json(const XiReport& r);

}  // namespace dih
