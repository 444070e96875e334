#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hk/arrangement.hpp"
#include "hk/error.hpp"
#include "hk/oracle.hpp"
#include "hk/region.hpp"

namespace hk {
namespace {

std::vector<Rat> grid(const Rat& end, long steps) {
  std::vector<Rat> xs;
  for (long i = 0; i <= steps; ++i) xs.push_back(end * make_rat(i, steps));
  return xs;
}

TEST(Arrangement, FacesTileTheBox) {
  std::vector<Segment2> segs = {
      {Point{0, 0}, Point{4, 3}},
      {Point{0, 3}, Point{4, 0}},
      {Point{1, 0}, Point{1, 3}},
      {Point{0, 1}, Point{4, 1}},
      {Point{2, 0}, Point{3, 3}},
  };
  const Arrangement2D arr(segs);
  Rat total = 0;
  for (const auto& f : arr.faces()) {
    EXPECT_GT(f.area, 0);
    EXPECT_GE(f.corners.size(), 3u);
    total += f.area;
  }
  EXPECT_EQ(total, 12);
  EXPECT_EQ(arr.box_min(), (Point{0, 0}));
  EXPECT_EQ(arr.box_max(), (Point{4, 3}));
}

TEST(Region, CcwPolygonOrdersVertices) {
  const auto poly = ccw_polygon({Point{1, 1}, Point{0, 0}, Point{0, 1}, Point{1, 0}});
  ASSERT_EQ(poly.size(), 4u);
  Rat twice = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % poly.size()];
    twice += a[0] * b[1] - a[1] * b[0];
  }
  EXPECT_EQ(twice, 2);
}

// Clipping with boundary integration and the arrangement decomposition are
// separate algorithms; they must agree everywhere.
TEST(Region, AreaRoutesAgree) {
  for (const auto& [name, pair] : fixtures::planar()) {
    const SliceFamily hk = hk_family(pair);
    for (const Rat& mu : grid(make_rat(3, 2), 12)) {
      const Rat t = mu + make_rat(1, 97);
      EXPECT_EQ(family_area(hk, t), area_of_slice(family_slice(hk, t))) << name << " mu=" << to_string(t);
    }
    const ToricPair moved = pair.translated(Point(2) - pair.polytope().vertices().front());
    const SliceFamily phi = phi_family(moved, 1);
    for (const Rat& lam : grid(1, 12)) {
      const Rat t = lam * make_rat(96, 97);
      EXPECT_EQ(family_area(phi, t), area_of_slice(family_slice(phi, t))) << name << " lambda=" << to_string(t);
    }
  }
}

TEST(Region, VolumeFunctionInterpolatesTheArea) {
  const ToricPair pair = fixtures::fano_x3();
  const SliceFamily fam = hk_family(pair);
  const PiecewisePoly f = family_volume_function(fam, 0, 1);
  for (const Rat& t : grid(1, 40)) EXPECT_EQ(f(t), family_area(fam, t)) << to_string(t);
  for (const Rat& e : family_events(fam, 0, 1)) {
    EXPECT_GT(e, 0);
    EXPECT_LT(e, 1);
  }
}

TEST(Region, HkSliceBelowOneIsScaledPolytope) {
  const ToricPair pair = fixtures::hexagon();
  EXPECT_EQ(area_of_slice(hk_slice(pair, make_rat(1, 2))), make_rat(9, 4));
  EXPECT_EQ(area_of_slice(hk_slice(pair, 1)), 9);
  EXPECT_EQ(area_of_slice(hk_slice(pair, 1 + Rat(static_cast<long>(pair.l())))), 0);
}

// The lattice count in degree m approximates the slice at m / q.
TEST(Region, HkSliceMatchesLatticeCount) {
  const ToricPair pair = fixtures::fano_p2();
  for (const Rat& z : {make_rat(5, 4), make_rat(3, 2), make_rat(7, 4)}) {
    const Rat exact = area_of_slice(hk_slice(pair, z));
    const OracleSample s = f_n(pair.lattice_polytope(), 64, z);
    EXPECT_LE(abs(s.f_value - exact), make_rat(1, 4)) << to_string(z);
  }
}

TEST(Region, PhiSliceBasics) {
  const ToricPair pair = fixtures::unit_triangle();
  EXPECT_EQ(area_of_slice(phi_slice(pair, 0)), 1);
  EXPECT_EQ(area_of_slice(phi_slice(pair, make_rat(1, 2))), make_rat(7, 8));
  EXPECT_EQ(area_of_slice(phi_slice(pair, 2)), 0);
  const RegionSlice s = phi_slice(fixtures::square(0, 1), make_rat(1, 2));
  EXPECT_EQ(area_of_slice(s), make_rat(3, 4));
}

TEST(Region, OneDimensionalSlices) {
  const ToricPair seg = fixtures::segment(2);
  EXPECT_EQ(area_of_slice(hk_slice(seg, make_rat(5, 4))), 1);
  EXPECT_EQ(area_of_slice(phi_slice(seg, make_rat(1, 4))), make_rat(1, 2));
}

TEST(Region, Errors) {
  try {
    hk_slice(fixtures::unit_triangle(), -1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
  const ToricPair cube(LatticePolytope(product(fixtures::square(0, 1).polytope(),
                                               fixtures::segment(1).polytope())));
  try {
    phi_slice(cube, make_rat(1, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedDimension);
  }
}

}  // namespace
}  // namespace hk
