#include "doctest.h"
#include "dihedral/corpus.hpp"
#include "dihedral/dihedral.hpp"
#include "dihedral/errors.hpp"

using namespace dih;

TEST_CASE("stored determinants match both computations") {
  for (auto& c : corpus()) {
    CAPTURE(c.name);
    CHECK(determinant(c.diagram) == c.determinant);
    if (c.seifert) CHECK(determinant(c.diagram, c.seifert) == c.determinant);
  }
  CHECK(corpus_entry("trefoil").pattern == std::vector<int>{2, -2});
  CHECK_THROWS_AS(corpus_entry("nothing"), InvalidInput);
}
