#pragma once
#include <string>
#include <vector>

#include "dihedral/exact.hpp"

namespace dih {

struct BaseData {
  long sigma_X = 0;
  long chi_X = 2;
  bool simply_connected = true;
};

struct BranchData {
  long chi_B = 2;
  long e_B = 0;
  std::vector<long> xi;  // one defect per singular point
};

// chi(Y) = p chi(X) - (p-1)/2 chi(B) - k (p-1)/2
long euler_of_cover(long p, const BaseData& base, const BranchData& branch);
// sigma(Y) = p sigma(X) - (p-1)/4 e(B) - sum xi; the exact value, which
// may fail to be an integer
Rat signature_of_cover_exact(long p, const BaseData& base, const BranchData& branch);
// throws Inconsistency when the value is not an integer
long signature_of_cover(long p, const BaseData& base, const BranchData& branch);

enum class FormKind { Zero, PositiveDefinite, NegativeDefinite, IndefiniteOdd, IndefiniteEven };
std::string to_string(FormKind k);

struct FormDescriptor {
  long rank = 0, signature = 0;
  bool odd = true;
  FormKind kind = FormKind::Zero;
  std::string normal_form;  // e.g. "I(1)", "-I(3)", "3<1>+2<-1>", "2H"
};

// rank = chi - 2 for simply connected closed 4-manifolds. Definite forms
// are reported as the diagonal +-I (the only ones realized topologically
// in our setting); indefinite forms are classified by rank, signature
// and parity.
FormDescriptor intersection_form_descriptor(long sigma, long chi, bool odd_form);

}  // namespace dih
