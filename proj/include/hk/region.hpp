#pragma once

#include <cstddef>
#include <vector>

#include "hk/geometry.hpp"
#include "hk/poly.hpp"
#include "hk/toric_pair.hpp"

namespace hk {

// Horizontal slice of a region: interior-disjoint convex pieces.
struct RegionSlice {
  Rat level;
  std::vector<ConvexPolytope> pieces;
};

Rat area_of_slice(const RegionSlice& s);

// A convex body in dimension 1 or 2 moving with a parameter t:
//   body(t) = offset0 + t * offset1 + (scale0 + t * scale1) * shape.
// In 2D `shape` lists the vertices counter-clockwise; in 1D it is {lo, hi}.
struct MovingBody {
  std::vector<Point> shape;
  Point offset0;
  Point offset1;
  Rat scale0;
  Rat scale1;

  Rat scale_at(const Rat& t) const { return scale0 + t * scale1; }
  std::vector<Point> at(const Rat& t) const;
};

// t -> area(minuend(t) \ union of subtrahends(t)).
struct SliceFamily {
  std::size_t dim = 2;
  MovingBody minuend;
  std::vector<MovingBody> subtrahends;
};

// Counter-clockwise vertex order of a convex polygon given by any listing
// of its vertices.
std::vector<Point> ccw_polygon(std::vector<Point> vertices);

// Area of the family at t, computed by clipping and boundary integration.
Rat family_area(const SliceFamily& family, const Rat& t);

// Same quantity as disjoint pieces, computed through a segment arrangement.
RegionSlice family_slice(const SliceFamily& family, const Rat& t);

// Parameters in (a, b) where the combinatorics of the family may change.
std::vector<Rat> family_events(const SliceFamily& family, const Rat& a, const Rat& b);

// Exact piecewise polynomial t -> family_area(t) on [a, b]. Each interval
// between events is interpolated from dim + 1 samples and checked against
// one more; failing intervals are bisected, and kBreakpointVerificationFailed
// is thrown once the depth limit is reached.
PiecewisePoly family_volume_function(const SliceFamily& family, const Rat& a, const Rat& b);

// HK family in mu = z - 1: (1 + mu) P minus u + mu P for u in P ∩ Z^n.
SliceFamily hk_family(const ToricPair& pair);

// phi family in lambda: the unit cell minus u + lambda P for every lattice
// u whose translate can meet the cell for some lambda <= lambda_max.
// Requires 0 ∈ P when used over a range of lambda.
SliceFamily phi_family(const ToricPair& pair, const Rat& lambda_max);

// Slice of the HK region at height z >= 0. Throws kUnsupportedDimension
// for dim P >= 3 and kInvalidArgument for z < 0.
RegionSlice hk_slice(const ToricPair& pair, const Rat& z);
// Unit cell minus all lattice translates of lambda P.
RegionSlice phi_slice(const ToricPair& pair, const Rat& lambda);

}  // namespace hk
