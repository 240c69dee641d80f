#include "dihedral/twobridge_slice.hpp"

#include "dihedral/diagram.hpp"
#include "dihedral/errors.hpp"

namespace dih {

std::string family_name(Family f) { return f == Family::K1 ? "K1" : "K2"; }

std::vector<int> family_spec(const FamilyPoint& pt) {
  return pt.family == Family::K1 ? K1_spec(pt.a, pt.b) : K2_spec(pt.a, pt.b);
}

Int det_closed_form(const FamilyPoint& pt) {
  Int a = pt.a, b = pt.b;
  if (pt.family == Family::K1) {
    Int t = 8 * a * b + 2 * b - 1;
    return -t * t;
  }
  Int t = 8 * a * b + 2 * a + 2 * b + 1;
  return t * t;
}

P3Case p3_admissible(const FamilyPoint& pt) {
  long a = mod(pt.a, 3), b = mod(pt.b, 3);
  if (pt.family == Family::K1) {
    if (a == 0 && b == 2) return {true, 1};
    if (a == 1 && b == 1) return {true, 2};
  } else {
    if (a == 0 && b == 1) return {true, 3};
    if (a == 1 && b == 0) return {true, 4};
  }
  return {false, 0};
}

HomologyClass p3_characteristic_class(const FamilyPoint& pt) {
  switch (p3_admissible(pt).tag) {
    case 1: return {1, 0, 1, 1, -1, 1};
    case 2: return {-1, 1, 1, 0, 1, 1};
    case 3: return {1, 0, 1, -1, 1, 1};
    case 4: return {-1, 1, 1, 1, 0, 1};
  }
  throw InvalidInput("point admits no three-fold dihedral cover");
}

std::vector<AdmissiblePoint> enumerate_admissible(long p, long bound) {
  require(p >= 3 && p % 2 == 1 && is_prime(p), "p must be an odd prime");
  require(bound >= 1, "bound must be positive");
  std::vector<AdmissiblePoint> out;
  for (Family f : {Family::K1, Family::K2})
    for (long a = -bound; a <= bound; ++a)
      for (long b = -bound; b <= bound; ++b) {
        FamilyPoint pt{f, a, b};
        Int d = det_closed_form(pt);
        if (d % Int(p) != 0) continue;
        out.push_back({pt, d, p == 3 ? p3_admissible(pt).tag : 0});
      }
  return out;
}

bool is_square(const Int& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()); }

bool fox_milnor_square(const FamilyPoint& pt) { return is_square(abs(det_closed_form(pt))); }

}  // namespace dih
