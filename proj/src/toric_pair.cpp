#include "hk/toric_pair.hpp"

#include "hk/error.hpp"

namespace hk {

ToricPair::ToricPair(LatticePolytope p, Provenance provenance)
    : p_(std::move(p)), provenance_(provenance) {
  if (!p_.polytope().is_full_dimensional()) {
    throw Error(ErrorCode::kDegenerate, "polytope is not full-dimensional");
  }
  if (p_.polytope().vertices().size() < 2) {
    throw Error(ErrorCode::kDegenerate, "polytope needs at least two vertices");
  }
  points_ = hk::lattice_points(p_.polytope());
}

ToricPair ToricPair::from_vertices(const std::vector<Point>& vertices) {
  return ToricPair(LatticePolytope(hrep_from_vrep(vertices)), Provenance::kVertices);
}

ToricPair ToricPair::from_fan(const std::vector<Point>& rays, const std::vector<long>& coeffs) {
  return ToricPair(polytope_from_divisor(rays, coeffs), Provenance::kFan);
}

ToricPair ToricPair::scaled(long k) const {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "scale must be a positive integer");
  return ToricPair(LatticePolytope(scale(polytope(), Rat(k))), provenance_);
}

ToricPair ToricPair::translated(const Point& v) const {
  if (!v.is_integral()) {
    throw Error(ErrorCode::kInvalidArgument, "translation must be a lattice vector");
  }
  return ToricPair(LatticePolytope(translate(polytope(), v)), provenance_);
}

}  // namespace hk
