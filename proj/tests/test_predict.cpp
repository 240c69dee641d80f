#include <random>

#include "dihedral/errors.hpp"
#include "dihedral/predict.hpp"
#include "doctest.h"

using namespace dih;

TEST_CASE("CP2 profile from the three-fold cover of S4") {
  BaseData s4{0, 2, true};
  BranchData sphere{2, 0, {-1}};
  CHECK(euler_of_cover(3, s4, sphere) == 3);
  CHECK(signature_of_cover(3, s4, sphere) == 1);
  auto f = intersection_form_descriptor(1, 3, true);
  CHECK(f.rank == 1);
  CHECK(f.kind == FormKind::PositiveDefinite);
  CHECK(f.normal_form == "I(1)");
}

TEST_CASE("formula special cases") {
  BaseData x{5, 7, true};
  CHECK(euler_of_cover(5, x, BranchData{0, 0, {}}) == 35);
  CHECK(signature_of_cover(7, x, BranchData{2, 0, {}}) == 35);
  long one = euler_of_cover(5, x, BranchData{2, 0, {1}});
  CHECK(euler_of_cover(5, x, BranchData{2, 0, {1, 3}}) == one - 2);
  CHECK(signature_of_cover(5, x, BranchData{2, 0, {1, 3}}) == 25 - 4);
  CHECK(signature_of_cover(5, x, BranchData{2, 1, {}}) == 24);
  CHECK_THROWS_AS(signature_of_cover(3, x, BranchData{2, 1, {}}), Inconsistency);
  CHECK(signature_of_cover_exact(3, x, BranchData{2, 1, {}}) == Rat(29, 2));
  CHECK_THROWS_AS(euler_of_cover(4, x, BranchData{}), InvalidInput);
}

TEST_CASE("descriptors") {
  auto f = intersection_form_descriptor(0, 4, true);
  CHECK(f.rank == 2);
  CHECK(f.kind == FormKind::IndefiniteOdd);
  CHECK(f.normal_form == "1<1>+1<-1>");
  CHECK(intersection_form_descriptor(0, 4, false).normal_form == "1H");
  CHECK(intersection_form_descriptor(-8, 12, false).normal_form == "1(-E8)+1H");
  CHECK(intersection_form_descriptor(-3, 5, true).normal_form == "-I(3)");
  CHECK(intersection_form_descriptor(0, 2, true).kind == FormKind::Zero);
  CHECK_THROWS_AS(intersection_form_descriptor(3, 4, true), InvalidInput);
  CHECK_THROWS_AS(intersection_form_descriptor(1, 4, true), InvalidInput);
  CHECK_THROWS_AS(intersection_form_descriptor(2, 6, false), InvalidInput);
}

TEST_CASE("superposition on random inputs") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> v(-50, 50), pi(1, 10), kk(0, 3);
  for (int t = 0; t < 1000; ++t) {
    long p = 2 * pi(rng) + 1;
    auto draw = [&] {
      BaseData b{v(rng), v(rng), true};
      BranchData r{v(rng), 4 * v(rng), {}};
      for (long i = kk(rng); i > 0; --i) r.xi.push_back(v(rng));
      return std::pair{b, r};
    };
    auto [b1, r1] = draw();
    auto [b2, r2] = draw();
    BaseData b{b1.sigma_X + b2.sigma_X, b1.chi_X + b2.chi_X, true};
    BranchData r{r1.chi_B + r2.chi_B, r1.e_B + r2.e_B, r1.xi};
    r.xi.insert(r.xi.end(), r2.xi.begin(), r2.xi.end());
    CHECK(euler_of_cover(p, b, r) == euler_of_cover(p, b1, r1) + euler_of_cover(p, b2, r2));
    CHECK(signature_of_cover(p, b, r) ==
          signature_of_cover(p, b1, r1) + signature_of_cover(p, b2, r2));
  }
}
