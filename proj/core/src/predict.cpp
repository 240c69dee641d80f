#include "dihedral/predict.hpp"

#include "dihedral/errors.hpp"

namespace dih {

namespace {
void check_p(long p) { require(p >= 3 && p % 2 == 1, "p must be odd and at least 3"); }
}  // namespace

long euler_of_cover(long p, const BaseData& base, const BranchData& branch) {
  check_p(p);
  long h = (p - 1) / 2, k = long(branch.xi.size());
  return p * base.chi_X - h * branch.chi_B - k * h;
}

Rat signature_of_cover_exact(long p, const BaseData& base, const BranchData& branch) {
  check_p(p);
  Rat s = Rat(p * base.sigma_X) - Rat((p - 1) * branch.e_B, 4);
  for (long x : branch.xi) s -= x;
  s.canonicalize();
  return s;
}

long signature_of_cover(long p, const BaseData& base, const BranchData& branch) {
  Rat s = signature_of_cover_exact(p, base, branch);
  if (s.get_den() != 1)
    throw Inconsistency("signature formula is not integral: " + to_string(s) +
                        " ((p-1) e(B) must be divisible by 4)");
  return s.get_num().get_si();
}

std::string to_string(FormKind k) {
  switch (k) {
    case FormKind::Zero: return "zero";
    case FormKind::PositiveDefinite: return "positive definite";
    case FormKind::NegativeDefinite: return "negative definite";
    case FormKind::IndefiniteOdd: return "indefinite odd";
    case FormKind::IndefiniteEven: return "indefinite even";
  }
  return "";
}

FormDescriptor intersection_form_descriptor(long sigma, long chi, bool odd_form) {
  FormDescriptor f;
  f.rank = chi - 2;
  f.signature = sigma;
  f.odd = odd_form;
  require(f.rank >= 0, "chi must be at least 2");
  require((sigma < 0 ? -sigma : sigma) <= f.rank, "|sigma| exceeds the rank: no such form");
  require((f.rank - sigma) % 2 == 0, "rank and signature must have the same parity");
  long pos = (f.rank + sigma) / 2, neg = (f.rank - sigma) / 2;
  if (f.rank == 0) {
    f.kind = FormKind::Zero;
    f.normal_form = "0";
  } else if (neg == 0 || pos == 0) {
    // a definite form here is taken to be diagonal
    f.odd = true;
    f.kind = neg == 0 ? FormKind::PositiveDefinite : FormKind::NegativeDefinite;
    f.normal_form = (neg == 0 ? "I(" : "-I(") + std::to_string(f.rank) + ")";
  } else if (odd_form) {
    f.kind = FormKind::IndefiniteOdd;
    f.normal_form = std::to_string(pos) + "<1>+" + std::to_string(neg) + "<-1>";
  } else {
    require(sigma % 8 == 0, "even unimodular forms have signature divisible by 8");
    f.kind = FormKind::IndefiniteEven;
    long h = (f.rank - (sigma < 0 ? -sigma : sigma)) / 2;
    std::string s;
    if (sigma != 0) s = std::to_string((sigma < 0 ? -sigma : sigma) / 8) + (sigma < 0 ? "(-E8)" : "E8");
    if (h) s += (s.empty() ? "" : "+") + std::to_string(h) + "H";
    f.normal_form = s;
  }
  return f;
}

}  // namespace dih
