#pragma once
#include <string>
#include <vector>

#include "dihedral/exact.hpp"

namespace dih {

struct SeifertData {
  IMat L;
  int genus = 0;
  std::vector<std::string> basis_labels;
};

// class in the omega basis, integer lift
using HomologyClass = std::vector<long>;

// Seifert matrix on the plumbed surface of C(e_1..e_2k): L + L^T is
// tridiagonal with diagonal (-e_1, e_2, -e_3, ...) and off-diagonal
// (1, -1, 1, ...). L keeps the off-diagonal ones above the diagonal.
// Needs even twist counts.
SeifertData seifert_matrix_C(const std::vector<int>& e);
IMat symmetrize(const IMat& L);

// nonzero classes with L_V b = 0 (mod p), one per line through the origin,
// given by integer lifts with entries in (-p/2, p/2]
std::vector<HomologyClass> characteristic_classes(const IMat& LV, long p);
bool is_characteristic(const IMat& LV, const HomologyClass& b, long p);
// b and c span the same line mod p
bool same_class_mod(const HomologyClass& b, const HomologyClass& c, long p);

Int quad_form(const IMat& LV, const HomologyClass& b);

}  // namespace dih
