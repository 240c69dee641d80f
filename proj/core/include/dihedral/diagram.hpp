#pragma once
#include <array>
#include <string>
#include <vector>

#include "dihedral/exact.hpp"

namespace dih {

// A crossing in Wirtinger form. Arcs run from one undercrossing to the next.
// sign: +1 right-handed, -1 left-handed.
struct Crossing {
  int over = 0, under_in = 0, under_out = 0, sign = 1;
  bool operator==(const Crossing&) const = default;
};

// Oriented link diagram. Arcs 0..arcs-1 are numbered in traversal order,
// component by component. With no crossings every arc is an unknotted circle.
struct KnotDiagram {
  int arcs = 0;
  std::vector<Crossing> crossings;
  // crossings where each arc passes over, in order along the arc. The
  // crossing list alone does not fix this order; the cover complex needs it.
  std::vector<std::vector<int>> over_order;
  bool operator==(const KnotDiagram&) const = default;
};

void validate(const KnotDiagram& d);
bool has_over_order(const KnotDiagram& d);

struct ArcEnds {
  int start = -1;  // crossing where the arc leaves as under_out
  int end = -1;    // crossing where the arc arrives as under_in
};
std::vector<ArcEnds> arc_ends(const KnotDiagram& d);

// arcs of each component in traversal order; comp_of[arc] filled if given
std::vector<std::vector<int>> components(const KnotDiagram& d, std::vector<int>* comp_of = nullptr);

int writhe(const KnotDiagram& d);
// the 1-crossing curl: used wherever a circle arc would have no endpoints
KnotDiagram kinked_unknot(int sign = 1);

KnotDiagram build_two_bridge(const std::vector<int>& e);
std::vector<int> K1_spec(long a, long b);
std::vector<int> K2_spec(long a, long b);
KnotDiagram build_K1(long a, long b);
KnotDiagram build_K2(long a, long b);

// letters are (generator, +-1)
using Word = std::vector<std::pair<int, int>>;
struct Presentation {
  int generators = 0;
  std::vector<Word> relators;
};
// relator at a crossing j: x_o x_in^-1 x_o^-1 x_out for sign +1,
// x_o x_out x_o^-1 x_in^-1 for sign -1
Presentation wirtinger(const KnotDiagram& d);
// exponent-sum matrix, relators x generators
IMat abelianized(const Presentation& P);
Homology first_homology(const Presentation& P);

// PD import: X[a,b,c,d] counterclockwise from the incoming under edge
KnotDiagram from_pd(const std::vector<std::array<int, 4>>& pd);

// relabel arcs so numbering follows traversal from a given arc of component 0
KnotDiagram canonical_numbering(const KnotDiagram& d, int first_arc = 0);

std::string to_json(const KnotDiagram& d);

// --- spatial links ---
struct Point3 {
  double x = 0, y = 0, z = 0;
};
// closed: the last point joins the first
using Polyline = std::vector<Point3>;

// An auxiliary closed curve given in space. Projecting it together with the
// knot produces its crossing events with the knot and with earlier curves.
struct CurveOverlay {
  Polyline walk;
};

struct Projection {
  KnotDiagram diagram;  // component k is polyline k
  // arc through the start point of each segment, per component
  std::vector<std::vector<int>> segment_arc;
  // linking numbers of the components in S^3, diagonal 0
  std::vector<std::vector<long>> linking;
};
// Projects along z after a fixed generic rotation; larger z passes over.
// Components with no undercrossing get a curl at their first point.
Projection project(const std::vector<Polyline>& link);
Projection overlay(const Polyline& knot, const std::vector<CurveOverlay>& curves);
KnotDiagram diagram_from_json(const std::string& text);

}  // namespace dih
