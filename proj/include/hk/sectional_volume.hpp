#pragma once

#include "hk/geometry.hpp"
#include "hk/poly.hpp"

namespace hk {

enum class BaseFacetPolicy {
  // Horizontal facets are accepted; the result may jump at the domain ends.
  kAllow,
  // Horizontal facets raise kFacetParallelToBase, which guarantees a
  // function that is continuous on the whole line.
  kReject,
};

// t -> Vol_{d-1}(P ∩ {x_d = t}) for a full-dimensional P in R^d, d >= 2.
// Breakpoints are the distinct last coordinates of the vertices. Each slab
// is interpolated from d samples and checked against one more; a mismatch
// throws kInterpolationMismatch.
PiecewisePoly sectional_volume_function(const ConvexPolytope& p,
                                        BaseFacetPolicy policy = BaseFacetPolicy::kAllow);

// Vol_{d-1}(P ∩ {x_d = t}).
Rat slice_volume(const ConvexPolytope& p, const Rat& t);

}  // namespace hk
