#pragma once

// Exact convex polytopes in ambient dimension <= 4.
//
// Every ConvexPolytope carries both representations: a sorted vertex list
// and an irredundant, canonically scaled list of facet inequalities. For
// polytopes that are not full-dimensional the affine hull is stored as a
// list of equations and the facets are taken relative to that hull.
// Polytopes are closed sets; all membership tests are non-strict.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "hk/rational.hpp"

namespace hk {

inline constexpr std::size_t kMaxAmbientDim = 4;

class Point {
 public:
  Point() = default;
  explicit Point(std::size_t dim) : coords_(dim, Rat(0)) {}
  explicit Point(std::vector<Rat> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<Rat> coords) : coords_(coords) {}

  static Point from_ints(const std::vector<long>& coords);

  std::size_t dim() const { return coords_.size(); }
  const Rat& operator[](std::size_t i) const { return coords_[i]; }
  Rat& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rat>& coords() const { return coords_; }

  bool is_integral() const;

  Point& operator+=(const Point& o);
  Point& operator-=(const Point& o);
  Point& operator*=(const Rat& s);

  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(Point a, const Rat& s) { return a *= s; }
  friend Point operator*(const Rat& s, Point a) { return a *= s; }
  friend bool operator==(const Point& a, const Point& b) {
    return a.coords_ == b.coords_;
  }
  // Lexicographic.
  friend bool operator<(const Point& a, const Point& b);

 private:
  std::vector<Rat> coords_;
};

Rat dot(const Point& a, const Point& b);

// {x : <normal, x> >= offset}
struct HalfSpace {
  Point normal;
  Rat offset;

  bool contains(const Point& x) const { return dot(normal, x) >= offset; }
  bool is_tight(const Point& x) const { return dot(normal, x) == offset; }
  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

// {x : <normal, x> == offset}
struct Hyperplane {
  Point normal;
  Rat offset;

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

class ConvexPolytope {
 public:
  std::size_t ambient_dim() const { return ambient_dim_; }
  // Dimension of the affine hull (0 for a single point).
  std::size_t dim() const { return affine_dim_; }
  bool is_full_dimensional() const { return affine_dim_ == ambient_dim_; }

  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }
  const std::vector<Hyperplane>& equations() const { return equations_; }

  bool contains(const Point& x) const;

  friend bool operator==(const ConvexPolytope& a, const ConvexPolytope& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_;
  }

 private:
  friend ConvexPolytope hrep_from_vrep(std::vector<Point> vertices);
  friend ConvexPolytope scale(const ConvexPolytope& p, const Rat& t);
  friend ConvexPolytope translate(const ConvexPolytope& p, const Point& v);

  std::size_t ambient_dim_ = 0;
  std::size_t affine_dim_ = 0;
  std::vector<Point> vertices_;
  std::vector<HalfSpace> halfspaces_;
  std::vector<Hyperplane> equations_;
};

// A polytope whose vertices are all integral.
class LatticePolytope {
 public:
  // Throws Error(kNonIntegralVertex).
  explicit LatticePolytope(ConvexPolytope polytope);

  const ConvexPolytope& polytope() const { return polytope_; }
  std::size_t dim() const { return polytope_.ambient_dim(); }

  friend bool operator==(const LatticePolytope&, const LatticePolytope&) = default;

 private:
  ConvexPolytope polytope_;
};

// {u : <u, ray_i> >= -coeff_i}. Throws kUnbounded, kDegenerate, kEmpty,
// kNonIntegralVertex.
LatticePolytope polytope_from_divisor(const std::vector<Point>& rays,
                                      const std::vector<long>& coeffs);
// Same, without the integrality requirement.
ConvexPolytope rational_polytope_from_divisor(const std::vector<Point>& rays,
                                              const std::vector<long>& coeffs);

// Throws kUnbounded or kEmpty. A system whose normals do not span the
// ambient space is reported as unbounded.
ConvexPolytope vrep_from_hrep(const std::vector<HalfSpace>& halfspaces,
                              std::size_t dim);
ConvexPolytope hrep_from_vrep(std::vector<Point> vertices);

// Throws kNegativeScale for t < 0; t = 0 gives the origin.
ConvexPolytope scale(const ConvexPolytope& p, const Rat& t);
ConvexPolytope translate(const ConvexPolytope& p, const Point& v);
std::optional<ConvexPolytope> intersect(const ConvexPolytope& p,
                                        const ConvexPolytope& q);
// Cartesian product; the polytope of a Segre product.
ConvexPolytope product(const ConvexPolytope& p, const ConvexPolytope& q);

// Lebesgue measure in the ambient space (0 unless full-dimensional).
Rat volume(const ConvexPolytope& p);

// Integer points, sorted lexicographically.
std::vector<Point> lattice_points(const ConvexPolytope& p);

bool contains(const ConvexPolytope& p, const Point& x);

// Axis-aligned unit cube [0,1]^dim translated by `corner`.
ConvexPolytope unit_cell(const Point& corner);

}  // namespace hk
