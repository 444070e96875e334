#pragma once

#include <cstddef>
#include <vector>

#include "hk/geometry.hpp"

namespace hk {

// A projective toric pair, represented by its lattice polytope P ⊂ R^{d-1}.
class ToricPair {
 public:
  enum class Provenance { kVertices, kFan };

  // Throws kDegenerate unless P is full-dimensional with at least two
  // vertices.
  explicit ToricPair(LatticePolytope p, Provenance provenance = Provenance::kVertices);

  static ToricPair from_vertices(const std::vector<Point>& vertices);
  static ToricPair from_fan(const std::vector<Point>& rays, const std::vector<long>& coeffs);

  const ConvexPolytope& polytope() const { return p_.polytope(); }
  const LatticePolytope& lattice_polytope() const { return p_; }
  Provenance provenance() const { return provenance_; }

  // Dimension of P (that is, d - 1).
  std::size_t lattice_dim() const { return p_.dim(); }
  // Total dimension d of the section ring.
  std::size_t d() const { return p_.dim() + 1; }
  // Number of vertices of P.
  std::size_t l() const { return p_.polytope().vertices().size(); }
  const std::vector<Point>& lattice_points() const { return points_; }

  ToricPair scaled(long k) const;
  ToricPair translated(const Point& v) const;

 private:
  LatticePolytope p_;
  Provenance provenance_;
  std::vector<Point> points_;
};

}  // namespace hk
