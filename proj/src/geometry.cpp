#include "hk/geometry.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <utility>

#include "hk/error.hpp"
#include "hk/linalg.hpp"

namespace hk {

Point Point::from_ints(const std::vector<long>& coords) {
  Point p(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) p[i] = coords[i];
  return p;
}

bool Point::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rat& r) { return is_integer(r); });
}

Point& Point::operator+=(const Point& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Point& Point::operator-=(const Point& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Point& Point::operator*=(const Rat& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

bool operator<(const Point& a, const Point& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(),
                                      b.coords_.begin(), b.coords_.end());
}

Rat dot(const Point& a, const Point& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::kDimMismatch, "dimension mismatch: " +
                                             std::to_string(a) + " vs " +
                                             std::to_string(b));
  }
}

// Scales (normal, offset) so that the normal is a primitive integer vector.
// The orientation of the inequality is preserved.
void make_primitive(Point& normal, Rat& offset) {
  BigInt lcm = 1;
  for (const auto& c : normal.coords()) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  BigInt g = 0;
  for (const auto& c : normal.coords()) {
    const BigInt v = c.get_num() * (lcm / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Rat factor(lcm, g);
  factor.canonicalize();
  normal *= factor;
  offset *= factor;
}

HalfSpace canonical_halfspace(Point normal, Rat offset) {
  make_primitive(normal, offset);
  return {std::move(normal), std::move(offset)};
}

Hyperplane canonical_hyperplane(Point normal, Rat offset) {
  make_primitive(normal, offset);
  for (std::size_t i = 0; i < normal.dim(); ++i) {
    if (normal[i] == 0) continue;
    if (normal[i] < 0) {
      normal *= Rat(-1);
      offset = -offset;
    }
    break;
  }
  return {std::move(normal), std::move(offset)};
}

bool halfspace_less(const HalfSpace& a, const HalfSpace& b) {
  if (a.normal == b.normal) return a.offset < b.offset;
  return a.normal < b.normal;
}

linalg::Matrix differences(const std::vector<Point>& pts,
                           const std::vector<std::size_t>& idx) {
  linalg::Matrix m;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    m.push_back((pts[idx[i]] - pts[idx[0]]).coords());
  }
  return m;
}

std::size_t affine_rank(const std::vector<Point>& pts,
                        const std::vector<std::size_t>& idx) {
  if (idx.size() <= 1) return 0;
  return linalg::rank(differences(pts, idx));
}

// Calls fn for every k-subset of {0..n-1}; fn returns false to stop.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool ConvexPolytope::contains(const Point& x) const {
  require_same_dim(ambient_dim_, x.dim());
  for (const auto& h : halfspaces_) {
    if (!h.contains(x)) return false;
  }
  for (const auto& e : equations_) {
    if (dot(e.normal, x) != e.offset) return false;
  }
  return !vertices_.empty();
}

bool contains(const ConvexPolytope& p, const Point& x) { return p.contains(x); }

LatticePolytope::LatticePolytope(ConvexPolytope polytope)
    : polytope_(std::move(polytope)) {
  for (const auto& v : polytope_.vertices()) {
    if (!v.is_integral()) {
      std::string coords;
      for (std::size_t i = 0; i < v.dim(); ++i) {
        coords += (i ? "," : "") + to_string(v[i]);
      }
      throw Error(ErrorCode::kNonIntegralVertex,
                  "vertex (" + coords + ") is not a lattice point");
    }
  }
}

ConvexPolytope hrep_from_vrep(std::vector<Point> pts) {
  if (pts.empty()) throw Error(ErrorCode::kEmpty, "no vertices given");
  const std::size_t n = pts.front().dim();
  if (n == 0 || n > kMaxAmbientDim) {
    throw Error(ErrorCode::kUnsupportedDimension,
                "ambient dimension must be between 1 and 4");
  }
  for (const auto& p : pts) require_same_dim(n, p.dim());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  ConvexPolytope out;
  out.ambient_dim_ = n;

  // Direction space of the affine hull, in reduced echelon form.
  linalg::Matrix dirs;
  for (std::size_t i = 1; i < pts.size(); ++i) dirs.push_back((pts[i] - pts[0]).coords());
  const std::size_t k = linalg::row_reduce(dirs);
  dirs.resize(k);
  out.affine_dim_ = k;

  for (auto& row : linalg::nullspace(dirs.empty() ? linalg::Matrix{} : dirs, n)) {
    Point normal(std::move(row));
    out.equations_.push_back(canonical_hyperplane(normal, dot(normal, pts[0])));
  }
  std::sort(out.equations_.begin(), out.equations_.end(),
            [](const Hyperplane& a, const Hyperplane& b) { return a.normal < b.normal; });

  if (k == 0) {
    out.vertices_ = {pts[0]};
    return out;
  }

  std::vector<HalfSpace> facets;
  for_each_subset(pts.size(), k, [&](const std::vector<std::size_t>& idx) {
    if (affine_rank(pts, idx) != k - 1) return true;
    // Normal inside the direction space, orthogonal to the chosen points.
    linalg::Matrix g;
    for (std::size_t i = 1; i < idx.size(); ++i) {
      const Point diff = pts[idx[i]] - pts[idx[0]];
      linalg::Row row(k);
      for (std::size_t j = 0; j < k; ++j) row[j] = dot(diff, Point(dirs[j]));
      g.push_back(std::move(row));
    }
    const auto kernel = linalg::nullspace(g, k);
    if (kernel.size() != 1) return true;
    Point normal(n);
    for (std::size_t j = 0; j < k; ++j) normal += Point(dirs[j]) * kernel[0][j];
    const Rat c = dot(normal, pts[idx[0]]);
    bool any_above = false, any_below = false;
    for (const auto& p : pts) {
      const Rat s = dot(normal, p);
      if (s > c) any_above = true;
      if (s < c) any_below = true;
      if (any_above && any_below) return true;
    }
    facets.push_back(any_below ? canonical_halfspace(normal * Rat(-1), -c)
                               : canonical_halfspace(normal, c));
    return true;
  });
  std::sort(facets.begin(), facets.end(), halfspace_less);
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  out.halfspaces_ = std::move(facets);

  for (const auto& p : pts) {
    linalg::Matrix tight;
    for (const auto& h : out.halfspaces_) {
      if (h.is_tight(p)) tight.push_back(h.normal.coords());
    }
    if (linalg::rank(std::move(tight)) == k) out.vertices_.push_back(p);
  }
  return out;
}

ConvexPolytope vrep_from_hrep(const std::vector<HalfSpace>& hs, std::size_t dim) {
  if (dim == 0 || dim > kMaxAmbientDim) {
    throw Error(ErrorCode::kUnsupportedDimension,
                "ambient dimension must be between 1 and 4");
  }
  linalg::Matrix normals;
  for (const auto& h : hs) {
    require_same_dim(dim, h.normal.dim());
    if (std::all_of(h.normal.coords().begin(), h.normal.coords().end(),
                    [](const Rat& c) { return c == 0; })) {
      throw Error(ErrorCode::kInvalidArgument, "halfspace with zero normal");
    }
    normals.push_back(h.normal.coords());
  }
  if (linalg::rank(normals) < dim) {
    throw Error(ErrorCode::kUnbounded,
                "halfspace normals do not span the ambient space");
  }

  std::vector<Point> vertices;
  for_each_subset(hs.size(), dim, [&](const std::vector<std::size_t>& idx) {
    linalg::Matrix a;
    linalg::Row b;
    for (auto i : idx) {
      a.push_back(hs[i].normal.coords());
      b.push_back(hs[i].offset);
    }
    auto x = linalg::solve(std::move(a), std::move(b));
    if (!x) return true;
    Point p(std::move(*x));
    for (const auto& h : hs) {
      if (!h.contains(p)) return true;
    }
    vertices.push_back(std::move(p));
    return true;
  });
  if (vertices.empty()) throw Error(ErrorCode::kEmpty, "halfspace system is infeasible");

  // A nonzero pointed recession cone has an extreme ray where dim-1
  // independent constraints are tight.
  bool unbounded = false;
  for_each_subset(hs.size(), dim - 1, [&](const std::vector<std::size_t>& idx) {
    linalg::Matrix a;
    for (auto i : idx) a.push_back(hs[i].normal.coords());
    const auto kernel = linalg::nullspace(a, dim);
    if (kernel.size() != 1) return true;
    const Point r(kernel[0]);
    bool all_nonneg = true, all_nonpos = true;
    for (const auto& h : hs) {
      const Rat s = dot(h.normal, r);
      if (s < 0) all_nonneg = false;
      if (s > 0) all_nonpos = false;
    }
    if (all_nonneg || all_nonpos) {
      unbounded = true;
      return false;
    }
    return true;
  });
  if (unbounded) throw Error(ErrorCode::kUnbounded, "polyhedron is unbounded");
  return hrep_from_vrep(std::move(vertices));
}

ConvexPolytope rational_polytope_from_divisor(const std::vector<Point>& rays,
                                              const std::vector<long>& coeffs) {
  if (rays.empty()) throw Error(ErrorCode::kInvalidArgument, "no rays given");
  if (rays.size() != coeffs.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "rays and coeffs have different lengths");
  }
  std::vector<HalfSpace> hs;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    require_same_dim(rays.front().dim(), rays[i].dim());
    hs.push_back({rays[i], Rat(-coeffs[i])});
  }
  ConvexPolytope p = vrep_from_hrep(hs, rays.front().dim());
  if (!p.is_full_dimensional()) {
    throw Error(ErrorCode::kDegenerate,
                "divisor polytope has dimension " + std::to_string(p.dim()) +
                    " < " + std::to_string(p.ambient_dim()));
  }
  return p;
}

LatticePolytope polytope_from_divisor(const std::vector<Point>& rays,
                                      const std::vector<long>& coeffs) {
  return LatticePolytope(rational_polytope_from_divisor(rays, coeffs));
}

ConvexPolytope scale(const ConvexPolytope& p, const Rat& t) {
  if (t < 0) throw Error(ErrorCode::kNegativeScale, "negative scale factor");
  if (t == 0) return hrep_from_vrep({Point(p.ambient_dim())});
  ConvexPolytope out = p;
  for (auto& v : out.vertices_) v *= t;
  for (auto& h : out.halfspaces_) h.offset *= t;
  for (auto& e : out.equations_) e.offset *= t;
  return out;
}

ConvexPolytope translate(const ConvexPolytope& p, const Point& v) {
  require_same_dim(p.ambient_dim(), v.dim());
  ConvexPolytope out = p;
  for (auto& x : out.vertices_) x += v;
  for (auto& h : out.halfspaces_) h.offset += dot(h.normal, v);
  for (auto& e : out.equations_) e.offset += dot(e.normal, v);
  return out;
}

std::optional<ConvexPolytope> intersect(const ConvexPolytope& p,
                                        const ConvexPolytope& q) {
  require_same_dim(p.ambient_dim(), q.ambient_dim());
  std::vector<HalfSpace> hs;
  for (const auto* poly : {&p, &q}) {
    hs.insert(hs.end(), poly->halfspaces().begin(), poly->halfspaces().end());
    for (const auto& e : poly->equations()) {
      hs.push_back({e.normal, e.offset});
      hs.push_back({e.normal * Rat(-1), -e.offset});
    }
  }
  try {
    return vrep_from_hrep(hs, p.ambient_dim());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kEmpty) return std::nullopt;
    throw;
  }
}

ConvexPolytope product(const ConvexPolytope& p, const ConvexPolytope& q) {
  std::vector<Point> pts;
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) {
      std::vector<Rat> c = a.coords();
      c.insert(c.end(), b.coords().begin(), b.coords().end());
      pts.emplace_back(std::move(c));
    }
  }
  return hrep_from_vrep(std::move(pts));
}

namespace {

// Triangulates the face spanned by `face` (indices into `verts`, affine
// dimension k) by coning from its first vertex over its facets.
void triangulate_face(const std::vector<Point>& verts,
                      const std::vector<HalfSpace>& hs,
                      const std::vector<std::size_t>& face, std::size_t k,
                      std::vector<std::size_t>& prefix,
                      std::vector<std::vector<std::size_t>>& out) {
  if (k == 0) {
    prefix.push_back(face[0]);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  const std::size_t apex = face[0];
  std::set<std::vector<std::size_t>> seen;
  for (const auto& h : hs) {
    if (h.is_tight(verts[apex])) continue;
    std::vector<std::size_t> sub;
    for (auto i : face) {
      if (h.is_tight(verts[i])) sub.push_back(i);
    }
    if (sub.empty() || affine_rank(verts, sub) != k - 1) continue;
    if (!seen.insert(sub).second) continue;
    prefix.push_back(apex);
    triangulate_face(verts, hs, sub, k - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Rat volume(const ConvexPolytope& p) {
  if (!p.is_full_dimensional()) return 0;
  const std::size_t n = p.ambient_dim();
  const auto& verts = p.vertices();
  std::vector<std::size_t> all(verts.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<std::size_t> prefix;
  std::vector<std::vector<std::size_t>> simplices;
  triangulate_face(verts, p.halfspaces(), all, n, prefix, simplices);
  Rat total = 0;
  for (const auto& s : simplices) total += abs(linalg::determinant(differences(verts, s)));
  BigInt fact = 1;
  for (std::size_t i = 2; i <= n; ++i) fact *= static_cast<unsigned long>(i);
  return total / Rat(fact);
}

std::vector<Point> lattice_points(const ConvexPolytope& p) {
  const std::size_t n = p.ambient_dim();
  std::vector<BigInt> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rat mn = p.vertices()[0][i], mx = mn;
    for (const auto& v : p.vertices()) {
      if (v[i] < mn) mn = v[i];
      if (v[i] > mx) mx = v[i];
    }
    lo[i] = ceil(mn);
    hi[i] = floor(mx);
    if (lo[i] > hi[i]) return {};
  }
  std::vector<Point> out;
  Point x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = lo[i];
  while (true) {
    if (p.contains(x)) out.push_back(x);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (x[i] < hi[i]) {
        x[i] += 1;
        for (std::size_t j = i + 1; j < n; ++j) x[j] = lo[j];
        break;
      }
      if (i == 0) return out;
    }
  }
}

ConvexPolytope unit_cell(const Point& corner) {
  const std::size_t n = corner.dim();
  std::vector<Point> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Point v = corner;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) v[i] += 1;
    }
    pts.push_back(std::move(v));
  }
  return hrep_from_vrep(std::move(pts));
}

}  // namespace hk
