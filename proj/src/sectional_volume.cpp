#include "hk/sectional_volume.hpp"

#include <algorithm>
#include <string>

#include "hk/error.hpp"

namespace hk {

namespace {

bool is_horizontal(const HalfSpace& h) {
  const std::size_t n = h.normal.dim();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (h.normal[i] != 0) return false;
  }
  return true;
}

}  // namespace

Rat slice_volume(const ConvexPolytope& p, const Rat& t) {
  const std::size_t n = p.ambient_dim();
  if (n < 2) throw Error(ErrorCode::kUnsupportedDimension, "need ambient dimension >= 2");
  if (!p.is_full_dimensional()) return 0;
  std::vector<HalfSpace> hs;
  for (const auto& h : p.halfspaces()) {
    const Rat rhs = h.offset - h.normal[n - 1] * t;
    if (is_horizontal(h)) {
      if (rhs > 0) return 0;
      continue;
    }
    Point normal(std::vector<Rat>(h.normal.coords().begin(), h.normal.coords().end() - 1));
    hs.push_back({std::move(normal), rhs});
  }
  try {
    return volume(vrep_from_hrep(hs, n - 1));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kEmpty) return 0;
    throw;
  }
}

PiecewisePoly sectional_volume_function(const ConvexPolytope& p, BaseFacetPolicy policy) {
  const std::size_t n = p.ambient_dim();
  if (n < 2) throw Error(ErrorCode::kUnsupportedDimension, "need ambient dimension >= 2");
  if (!p.is_full_dimensional()) {
    throw Error(ErrorCode::kDegenerate, "polytope is not full-dimensional");
  }
  if (policy == BaseFacetPolicy::kReject) {
    for (const auto& h : p.halfspaces()) {
      if (is_horizontal(h)) {
        throw Error(ErrorCode::kFacetParallelToBase,
                    "facet at level " + to_string(h.offset / h.normal[n - 1]) +
                        " is parallel to the base");
      }
    }
  }
  std::vector<Rat> levels;
  for (const auto& v : p.vertices()) levels.push_back(v[n - 1]);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  std::vector<Poly> pieces;
  const Rat denom(static_cast<long>(n + 1));
  for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
    const Rat w = levels[i + 1] - levels[i];
    std::vector<Rat> xs, ys;
    for (std::size_t j = 1; j <= n; ++j) {
      xs.push_back(levels[i] + w * Rat(static_cast<long>(j)) / denom);
      ys.push_back(slice_volume(p, xs.back()));
    }
    Poly piece = interpolate(xs, ys);
    const Rat check = levels[i] + w * make_rat(static_cast<long>(2 * n + 1), 2) / denom;
    if (piece(check) != slice_volume(p, check)) {
      throw Error(ErrorCode::kInterpolationMismatch,
                  "slab [" + to_string(levels[i]) + ", " + to_string(levels[i + 1]) +
                      "] is not polynomial of degree < " + std::to_string(n));
    }
    pieces.push_back(std::move(piece));
  }
  return PiecewisePoly(std::move(levels), std::move(pieces));
}

}  // namespace hk
