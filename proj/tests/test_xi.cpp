#include "doctest.h"
#include "dihedral/errors.hpp"
#include "dihedral/xi.hpp"
#include "oracles.hpp"

using namespace dih;

namespace {

XiInput input(std::vector<int> e, HomologyClass beta, int realization = 0, int side = 1) {
  XiInput in;
  in.e = e;
  in.beta = beta;
  in.p = 3;
  in.side = side;
  auto rs = realizations(plumbed_surface(e), beta, {}, realization + 1);
  REQUIRE(int(rs.size()) == realization + 1);
  in.beta_word = rs[realization];
  return in;
}

bool symmetric(const QMat& A) {
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j)
      if (A(i, j) != A(j, i)) return false;
  return true;
}

}  // namespace

TEST_CASE("all three terms vanish") {
  auto r = xi_from_terms(3, 0, QMat(0, 0), 0);
  CHECK(r.xi == 0);
  CHECK(r.integral);
  auto q = xi_from_terms(5, -6, QMat(0, 0), 0);
  CHECK(q.quad_term == Rat(-24, 5));
}

TEST_CASE("trefoil linking matrix") {
  auto lm = linking_matrix_A(input({2, -2}, {1, -1}));
  CHECK(lm.A.rows == 1);
  CHECK(lm.basis.r == 0);
  CHECK(lm.basis.size() == 1);
  CHECK(symmetric(lm.A));
  // the same entry from the lifted presentation complex
  auto O = oracle::presentation_linking(lm.cover);
  Rat v = 0;
  for (auto [i, a] : lm.framed[0])
    for (auto [j, b] : lm.elements[0]) v += Rat(a * b) * O(i, j);
  CHECK(v == lm.A(0, 0));
  CHECK(cover_homology(lm.cover, 1).torsion.empty());
}

TEST_CASE("trefoil defect is realization independent but not integral") {
  auto r = xi_report(input({2, -2}, {1, -1}));
  CHECK(r.quad_term == Rat(-8, 3));
  CHECK(r.sigma_W == -1);
  CHECK(r.tl_term == 0);
  CHECK(r.xi == Rat(-11, 3));
  CHECK_FALSE(r.integral);
  CHECK_THROWS_AS(xi_p(input({2, -2}, {1, -1})), Inconsistency);
  auto inv = xi_invariance_check({input({2, -2}, {1, -1}), input({2, -2}, {1, -1}, 2), input({2, -2}, {1, 2}),
                                  input({2, -2}, {-1, 1}, 0, -1)});
  CHECK(inv.agree);
  CHECK(inv.reports.size() == 4);
}

TEST_CASE("K1(1,1) at p = 3") {
  auto e = K1_spec(1, 1);
  auto lm = linking_matrix_A(input(e, {-1, 1, 1, 0, 1, 1}));
  CHECK(lm.A.rows == 5);
  CHECK(lm.basis.r == 4);
  CHECK(symmetric(lm.A));
  auto inv = xi_invariance_check(
      {input(e, {-1, 1, 1, 0, 1, 1}), input(e, {-1, 1, 1, 0, 1, 1}, 1, -1), input(e, {2, 1, 1, 0, 1, 1})});
  CHECK(inv.agree);
  for (auto& r : inv.reports) {
    CHECK(r.integral);
    CHECK(r.xi == -1);
    CHECK(r.quad_term == 0);
  }
}

TEST_CASE("K1(3,2) at p = 3") {
  auto e = K1_spec(3, 2);
  auto a = xi_p(input(e, {1, 0, 1, 1, -1, 1}));
  auto b = xi_p(input(e, {1, 0, 1, 1, -1, 1}));
  CHECK(a.xi == b.xi);
  CHECK(a.A == b.A);
  CHECK(a.xi == 1);
  CHECK(a.nullity == 0);
  auto inv = xi_invariance_check({input(e, {1, 0, 1, 1, -1, 1}, 2), input(e, {-1, 0, -1, -1, 1, -1}, 0, -1)});
  CHECK(inv.agree);
}

TEST_CASE("basis choice does not matter") {
  auto e = K1_spec(1, 1);
  HomologyClass beta{-1, 1, 1, 0, 1, 1};
  auto base = input(e, beta);
  auto S = plumbed_surface(e);
  auto B = basis_curves(S, seifert_matrix_C(e).L, beta, 3, base.beta_word);
  auto other = base;
  for (auto& c : B.w_classes) other.w_words.push_back(realizations(S, c, {base.beta_word}, 3).back());
  CHECK(xi_report(other).xi == xi_report(base).xi);
}

TEST_CASE("xi input errors") {
  CHECK_THROWS_AS(linking_matrix_A(input({2, -2}, {1, 1})), InvalidInput);
  CHECK_THROWS_AS(xi_invariance_check({input({2, -2}, {1, -1}), input({2, -2}, {1, 1})}), InvalidInput);
  // this curve runs twice through a twisted band and is knotted
  CHECK_THROWS_AS(xi_report(input({2, -2}, {4, -1})), InvalidInput);
  auto bad = input({2, -2}, {1, -1});
  bad.beta_word = realizations(plumbed_surface({2, -2}), {1, 2}, {}, 1)[0];
  CHECK_THROWS_AS(linking_matrix_A(bad), InvalidInput);
}
