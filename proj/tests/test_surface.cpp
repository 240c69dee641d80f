#include <random>

#include "doctest.h"
#include "dihedral/dihedral.hpp"
#include "dihedral/errors.hpp"
#include "dihedral/surface.hpp"

using namespace dih;

namespace {

const std::vector<std::vector<int>> kPatterns = {{2, -2}, {2, 2}, {-2, 4}, {2, 2, 2, -2, -2, 2}, {6, 2, 4, -2, -6, 4}};

SurfaceWord random_word(std::mt19937& rng, int bands) {
  std::uniform_int_distribution<int> len(1, 3), band(0, bands - 1), dir(0, 1);
  std::uniform_real_distribution<double> slot(-0.7, 0.7);
  SurfaceWord w(len(rng));
  for (auto& b : w) b = {band(rng), dir(rng) ? 1 : -1, slot(rng)};
  return w;
}

long pairing(const IMat& L, const HomologyClass& a, const HomologyClass& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) s += a[i] * L(i, j) * b[j];
  return s.get_si();
}

}  // namespace

TEST_CASE("plumbed surface realizes the Seifert matrix") {
  for (auto& e : kPatterns) {
    CAPTURE(e.size());
    auto S = plumbed_surface(e);
    auto L = seifert_matrix_C(e).L;
    CHECK(core_linking(S) == L);
    auto B = boundary(S);
    auto pr = project({B.curve});
    CHECK(components(pr.diagram).size() == 1);
    CHECK(alexander_polynomial(pr.diagram) == alexander_polynomial(L));
    CHECK(determinant(pr.diagram) == determinant(build_two_bridge(e)));
    CHECK(B.gaps.size() == 2 * e.size() + 1);
    for (size_t g = 0; g + 1 < B.gaps.size(); ++g) CHECK(B.gaps[g].x1 < B.gaps[g + 1].x0);
  }
}

TEST_CASE("word classes and embeddedness") {
  auto S = plumbed_surface({2, 2, 2, -2, -2, 2});
  for (int i = 0; i < 6; ++i) {
    auto v = word_class(S, core_word(S, i));
    for (int j = 0; j < 6; ++j) CHECK(v[j] == (i == j ? 1 : 0));
  }
  SurfaceWord w{{0, 1, 0.3}, {0, 1, -0.3}};
  CHECK(word_class(S, w)[0] == 2);
  SurfaceWord twice{{0, 1, 0.3}, {0, 1, 0.3}};
  CHECK_FALSE(embedded(S, twice));
  // a curve over bands 0 and 1 meets the core of band 1 only when slots clash
  SurfaceWord ab{{0, S.orient[0], 0}, {1, S.orient[1], 0.4}};
  CHECK(embedded(S, ab));
  CHECK(disjoint(S, ab, core_word(S, 3)));
  CHECK_FALSE(disjoint(S, ab, SurfaceWord{{1, 1, 0.4}}));
  CHECK_THROWS_AS(word_class(S, SurfaceWord{{6, 1, 0}}), InvalidInput);
  CHECK_THROWS_AS(surface_curve(S, SurfaceWord{{0, 1, 0.9}}, 0, 0.2), InvalidInput);
}

TEST_CASE("pushed-off linking is the Seifert form on random curves") {
  std::mt19937 rng(7);
  for (auto& e : kPatterns) {
    auto S = plumbed_surface(e);
    auto L = seifert_matrix_C(e).L;
    int done = 0;
    for (int trial = 0; trial < 200 && done < 8; ++trial) {
      auto a = random_word(rng, S.bands()), b = random_word(rng, S.bands());
      if (!embedded(S, a) || !embedded(S, b)) continue;
      auto ca = surface_curve(S, a, 0), cb = surface_curve(S, b, 0.05);
      long lk = project({ca.curve, cb.curve}).linking[0][1];
      CHECK(lk == pairing(L, word_class(S, a), word_class(S, b)));
      ++done;
    }
    CHECK(done == 8);
  }
}
