#pragma once
#include <string>
#include <vector>

#include "dihedral/exact.hpp"
#include "dihedral/seifert.hpp"

namespace dih {

enum class Family { K1, K2 };
std::string family_name(Family f);

struct FamilyPoint {
  Family family = Family::K1;
  long a = 0, b = 0;
  bool ribbon() const { return a != 0 && b != 0; }
  bool operator==(const FamilyPoint&) const = default;
};

std::vector<int> family_spec(const FamilyPoint& pt);

// det(L + L^T): -(8ab+2b-1)^2 for K1, (8ab+2a+2b+1)^2 for K2
Int det_closed_form(const FamilyPoint& pt);

struct P3Case {
  bool admissible = false;
  int tag = 0;  // 1,2 for K1; 3,4 for K2; 0 when inadmissible
};
P3Case p3_admissible(const FamilyPoint& pt);
HomologyClass p3_characteristic_class(const FamilyPoint& pt);

struct AdmissiblePoint {
  FamilyPoint pt;
  Int det;
  int tag = 0;  // p = 3 case number, else 0
};
// all |a|,|b| <= bound with p | det, K1 before K2, then by (a, b)
std::vector<AdmissiblePoint> enumerate_admissible(long p, long bound);

bool is_square(const Int& n);
bool fox_milnor_square(const FamilyPoint& pt);

}  // namespace dih
