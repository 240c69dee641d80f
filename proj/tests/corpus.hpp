#pragma once
#include "dihedral/diagram.hpp"

// small knots shared by the tests
inline dih::KnotDiagram trefoil() { return dih::from_pd({{1, 5, 2, 4}, {3, 1, 4, 6}, {5, 3, 6, 2}}); }
inline dih::KnotDiagram figure_eight() { return dih::from_pd({{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}}); }
inline dih::KnotDiagram six_one() {
  return dih::from_pd({{1, 7, 2, 6}, {3, 10, 4, 11}, {5, 3, 6, 2}, {7, 1, 8, 12}, {9, 4, 10, 5}, {11, 9, 12, 8}});
}
inline dih::KnotDiagram unknot() { return {1, {}, {}}; }
