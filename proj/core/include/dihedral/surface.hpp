#pragma once
#include <vector>

#include "dihedral/diagram.hpp"
#include "dihedral/seifert.hpp"

namespace dih {

// One traversal of a band. dir +1 runs from the left foot to the right foot;
// slot in (-1, 1) is the position across the band.
struct BandPass {
  int band = 0;
  int dir = 1;
  double slot = 0;
  bool operator==(const BandPass&) const = default;
};
// closed curve on the surface: consecutive passes (cyclically) are joined by
// half-circle chords on the disk
using SurfaceWord = std::vector<BandPass>;

// Linear plumbing of 2k bands on a disk in space. Band i has |e_i|/2 full
// twists; its feet sit on the top edge of the disk, interleaved with the
// feet of bands i-1 and i+1, and its arch crosses each neighbour once.
struct PlumbedSurface {
  std::vector<int> e;
  double half_width = 0.25;
  double arch = 2.0;
  // over[i]: band i passes over band i+1 at their crossing
  std::vector<int> over;
  // core i runs along band i in direction orient[i]
  std::vector<int> orient;
  // full right-handed twists of band i (negative: left-handed)
  std::vector<int> turns;
  int bands() const { return int(e.size()); }
  double left_foot(int i) const { return 3.0 * i; }
  double right_foot(int i) const { return 3.0 * i + 4.5; }
  double x_min() const { return -1.5; }
  double x_max() const { return 3.0 * bands() + 3.0; }
  double depth() const { return (x_max() - x_min()) / 2 + 1.0; }
};

// surface whose cores have linking matrix seifert_matrix_C(e).L,
// L(i,j) = lk(c_i, c_j pushed off along the positive normal)
PlumbedSurface plumbed_surface(const std::vector<int>& e);

// a stretch of the top edge of the disk lying on the boundary, between feet
struct EdgeGap {
  double x0 = 0, x1 = 0;
  int segment = 0;  // a boundary segment inside the gap
};
struct SurfaceBoundary {
  Polyline curve;
  std::vector<EdgeGap> gaps;  // ascending in x
};
// the boundary knot, oriented as the boundary of the surface
SurfaceBoundary boundary(const PlumbedSurface& S);

struct SpatialCurve {
  Polyline curve;
  // per chord (joining pass t to pass t+1): a segment near its middle and its ends
  std::vector<int> chord_segment;
  std::vector<std::pair<double, double>> chord_ends;
};
// The curve pushed off the surface by height h along the normal, and moved
// across the bands by lateral (in slot units).
SpatialCurve surface_curve(const PlumbedSurface& S, const SurfaceWord& w, double h, double lateral = 0);

SurfaceWord core_word(const PlumbedSurface& S, int i);
// class of the curve in the basis of cores
HomologyClass word_class(const PlumbedSurface& S, const SurfaceWord& w);
// top-edge position of the entry and exit foot points of a pass
double entry_x(const PlumbedSurface& S, const BandPass& b);
double exit_x(const PlumbedSurface& S, const BandPass& b);
// the curve is embedded: slots distinct per band, chords pairwise non-crossing
bool embedded(const PlumbedSurface& S, const SurfaceWord& w);
// two embedded curves are disjoint
bool disjoint(const PlumbedSurface& S, const SurfaceWord& a, const SurfaceWord& b);

// the same curve moved across the bands by sigma slot units to its left; a
// parallel copy for small sigma
SurfaceWord shifted(const SurfaceWord& w, double sigma);
// embedded words of class v disjoint from every word in avoid: each band i is
// passed |v_i| times, in every cyclic order, on slots from a fixed grid;
// at most limit results, in a deterministic order
std::vector<SurfaceWord> realizations(const PlumbedSurface& S, const HomologyClass& v,
                                      const std::vector<SurfaceWord>& avoid = {}, int limit = 1);

// lk(c_i, c_j^+) read off projections of the spatial cores
IMat core_linking(const PlumbedSurface& S);

}  // namespace dih
