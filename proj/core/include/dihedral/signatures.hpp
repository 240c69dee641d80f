#pragma once
#include <map>

#include "dihedral/exact.hpp"

namespace dih {

struct Inertia {
  int pos = 0, neg = 0, zero = 0;
  int signature() const { return pos - neg; }
};
// exact, by symmetric rational pivoting
Inertia inertia(const QMat& M);
int matrix_signature(const QMat& M);
int matrix_signature(const IMat& M);

// Singular forms (zeta^i a root of the Alexander polynomial) raise
// SingularForm unless Degenerate is asked for, which returns pos - neg of
// the degenerate form (not the averaged one-sided limit).
enum class SingularPolicy { Error, Degenerate };

// signature of (1 - w) L + (1 - conj w) L^T at w = exp(2 pi i k / p)
int tl_signature(const IMat& L, long p, long k, SingularPolicy policy = SingularPolicy::Error);
std::map<long, int> tl_signatures(const IMat& L, long p, SingularPolicy policy = SingularPolicy::Error);
int tl_sum(const IMat& L, long p, SingularPolicy policy = SingularPolicy::Error);

// rational bounds lo <= cos(2 pi j / n) <= hi, width below 2^-bits
std::pair<Rat, Rat> cos_bounds(long j, long n, int bits);

}  // namespace dih
