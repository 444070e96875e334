#include <gtest/gtest.h>

#include <functional>

#include "fixtures.hpp"
#include "hk/error.hpp"
#include "hk/geometry.hpp"

namespace hk {
namespace {

std::vector<Point> pts(const std::vector<std::vector<long>>& vs) {
  std::vector<Point> out;
  for (const auto& v : vs) out.push_back(Point::from_ints(v));
  return out;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(Geometry, HrepFromVrepDropsInteriorPoints) {
  const ConvexPolytope p = hrep_from_vrep(pts({{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}, {1, 0}}));
  EXPECT_EQ(p.vertices().size(), 4u);
  EXPECT_EQ(p.halfspaces().size(), 4u);
  EXPECT_EQ(volume(p), 4);
  for (const auto& v : p.vertices()) {
    int tight = 0;
    for (const auto& h : p.halfspaces()) {
      EXPECT_TRUE(h.contains(v));
      tight += h.is_tight(v);
    }
    EXPECT_GE(tight, 2);
  }
}

TEST(Geometry, RoundTripBetweenRepresentations) {
  const ConvexPolytope p = fixtures::hexagon().polytope();
  const ConvexPolytope q = vrep_from_hrep(p.halfspaces(), 2);
  EXPECT_EQ(p, q);
  EXPECT_EQ(q.halfspaces(), p.halfspaces());
}

TEST(Geometry, KnownVolumes) {
  EXPECT_EQ(volume(fixtures::hexagon().polytope()), 9);
  EXPECT_EQ(volume(fixtures::fano_p2().polytope()), make_rat(9, 2));
  EXPECT_EQ(volume(fixtures::fano_x3().polytope()), 4);
  EXPECT_EQ(volume(fixtures::fano_x4().polytope()), make_rat(7, 2));
  EXPECT_EQ(volume(fixtures::fano_x5().polytope()), 3);
  EXPECT_EQ(volume(hrep_from_vrep(pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}))),
            make_rat(1, 6));
  EXPECT_EQ(volume(hrep_from_vrep(
                pts({{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}))),
            make_rat(1, 24));
  // Lower-dimensional polytopes have no ambient volume.
  EXPECT_EQ(volume(hrep_from_vrep(pts({{0, 0}, {3, 3}}))), 0);
}

TEST(Geometry, DivisorPolytope) {
  const LatticePolytope p =
      polytope_from_divisor(pts({{1, 0}, {0, 1}, {-1, 1}, {0, -1}}), {1, 0, 0, 1});
  EXPECT_EQ(p.polytope().vertices(), hrep_from_vrep(pts({{-1, 0}, {0, 0}, {1, 1}, {-1, 1}})).vertices());
  EXPECT_EQ(volume(p.polytope()), make_rat(3, 2));
  EXPECT_EQ(lattice_points(fixtures::fano_p2().polytope()).size(), 10u);
}

TEST(Geometry, DivisorErrors) {
  EXPECT_EQ(code_of([] { polytope_from_divisor(pts({{1, 0}, {0, 1}}), {1, 1}); }),
            ErrorCode::kUnbounded);
  EXPECT_EQ(code_of([] { polytope_from_divisor(pts({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}), {-1, -1, 0, 0}); }),
            ErrorCode::kEmpty);
  EXPECT_EQ(code_of([] { polytope_from_divisor(pts({{2, 0}, {-1, 0}, {0, 1}, {0, -1}}), {1, 0, 1, 0}); }),
            ErrorCode::kNonIntegralVertex);
  const ConvexPolytope r =
      rational_polytope_from_divisor(pts({{2, 0}, {-1, 0}, {0, 1}, {0, -1}}), {1, 0, 1, 0});
  EXPECT_EQ(volume(r), make_rat(1, 2));
}

TEST(Geometry, ScaleTranslateContains) {
  const ConvexPolytope p = fixtures::unit_triangle().polytope();
  const ConvexPolytope s = scale(p, 3);
  EXPECT_EQ(volume(s), make_rat(9, 2));
  EXPECT_EQ(lattice_points(s).size(), 10u);
  EXPECT_TRUE(contains(s, Point{make_rat(3, 2), make_rat(3, 2)}));
  EXPECT_FALSE(contains(s, Point{2, make_rat(3, 2)}));
  const ConvexPolytope t = translate(p, Point{5, -1});
  EXPECT_TRUE(t.contains(Point{5, 0}));
  EXPECT_EQ(volume(t), volume(p));
  EXPECT_EQ(scale(p, 0).vertices().size(), 1u);
  EXPECT_EQ(code_of([&] { scale(p, -1); }), ErrorCode::kNegativeScale);
}

TEST(Geometry, IntersectAndProduct) {
  const ConvexPolytope a = fixtures::square(0, 2).polytope();
  const ConvexPolytope b = fixtures::square(1, 3).polytope();
  const auto ab = intersect(a, b);
  ASSERT_TRUE(ab.has_value());
  EXPECT_EQ(volume(*ab), 1);
  EXPECT_FALSE(intersect(a, fixtures::square(5, 6).polytope()).has_value());

  const ConvexPolytope seg = fixtures::segment(2).polytope();
  const ConvexPolytope prism = product(fixtures::unit_triangle().polytope(), seg);
  EXPECT_EQ(prism.ambient_dim(), 3u);
  EXPECT_EQ(prism.vertices().size(), 6u);
  EXPECT_EQ(volume(prism), 1);
}

TEST(Geometry, LatticePointsAreSorted) {
  const auto lp = lattice_points(fixtures::square(-1, 1).polytope());
  ASSERT_EQ(lp.size(), 9u);
  for (std::size_t i = 0; i + 1 < lp.size(); ++i) EXPECT_TRUE(lp[i] < lp[i + 1]);
}

TEST(Geometry, UnitCell) {
  const ConvexPolytope c = unit_cell(Point{2, 3});
  EXPECT_EQ(volume(c), 1);
  EXPECT_TRUE(c.contains(Point{3, 4}));
  EXPECT_FALSE(c.contains(Point{1, 3}));
}

TEST(ToricPair, RejectsDegenerateInput) {
  EXPECT_EQ(code_of([] { fixtures::from_ints({{0, 0}, {1, 1}}); }), ErrorCode::kDegenerate);
  EXPECT_EQ(code_of([] { fixtures::from_ints({{3}}); }), ErrorCode::kDegenerate);
  const ToricPair p = fixtures::hexagon();
  EXPECT_EQ(p.l(), 6u);
  EXPECT_EQ(p.d(), 3u);
  EXPECT_EQ(p.lattice_points().size(), 13u);
  EXPECT_EQ(volume(p.scaled(2).polytope()), 36);
  EXPECT_THROW(p.translated(Point{make_rat(1, 2), 0}), Error);
}

}  // namespace
}  // namespace hk
