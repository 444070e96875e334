#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "hk/oracle.hpp"

namespace hk {
namespace {

// Direct restatement of the slice count on exact rationals.
long naive_slice_count(const ToricPair& pair, long q, long m) {
  const ConvexPolytope mp = scale(pair.polytope(), m);
  const ConvexPolytope rest = scale(pair.polytope(), std::max(m - q, 0L));
  long count = 0;
  for (const auto& w : lattice_points(mp)) {
    bool hit = false;
    if (m >= q) {
      for (const auto& u : pair.lattice_points()) {
        if (rest.contains(w - u * Rat(q))) {
          hit = true;
          break;
        }
      }
    }
    count += !hit;
  }
  return count;
}

TEST(Oracle, EhrhartCounts) {
  for (long n = 0; n <= 5; ++n) {
    EXPECT_EQ(ehrhart_count(fixtures::square(0, 1).lattice_polytope(), n), (n + 1) * (n + 1));
    EXPECT_EQ(ehrhart_count(fixtures::unit_triangle().lattice_polytope(), n), (n + 1) * (n + 2) / 2);
    EXPECT_EQ(ehrhart_count(fixtures::segment(3).lattice_polytope(), n), 3 * n + 1);
  }
  std::vector<Point> s3 = {Point{0, 0, 0}, Point{1, 0, 0}, Point{0, 1, 0}, Point{0, 0, 1}};
  const LatticePolytope tet(hrep_from_vrep(s3));
  EXPECT_EQ(ehrhart_count(tet, 4), 35);
}

TEST(Oracle, SliceCountExamples) {
  EXPECT_EQ(slice_count(fixtures::unit_triangle().lattice_polytope(), 2, 2), 3);
  EXPECT_EQ(slice_count(fixtures::segment(1).lattice_polytope(), 4, 5), 2);
  EXPECT_EQ(slice_count(fixtures::unit_triangle().lattice_polytope(), 4, 1), 3);
}

TEST(Oracle, SliceCountMatchesNaiveRecount) {
  std::vector<fixtures::Named> cases = fixtures::fanos();
  cases.push_back({"F2(1,3)", fixtures::hirzebruch(2, 1, 3)});
  cases.push_back({"segment", fixtures::from_ints({{-1}, {2}})});
  for (const auto& [name, pair] : cases) {
    for (long q : {2L, 3L, 4L}) {
      for (long m = 0; m <= q * 3; m += 1) {
        EXPECT_EQ(slice_count(pair.lattice_polytope(), q, m), naive_slice_count(pair, q, m))
            << name << " q=" << q << " m=" << m;
      }
    }
  }
}

TEST(Oracle, DensitySamples) {
  const LatticePolytope p2 = fixtures::unit_triangle().lattice_polytope();
  const OracleSample s = f_n(p2, 2, 1);
  EXPECT_EQ(s.m, 2);
  EXPECT_EQ(s.count, 3);
  EXPECT_EQ(s.f_value, make_rat(3, 4));
  EXPECT_EQ(f_n(p2, 8, 0).f_value, make_rat(1, 64));
  EXPECT_EQ(f_n(p2, 8, 4).f_value, 0);
  EXPECT_EQ(f_n(p2, 8, make_rat(3, 16)).m, 1);
}

TEST(Oracle, EhkEstimateForRegularRing) {
  EXPECT_EQ(oracle_ehk(fixtures::unit_triangle().lattice_polytope(), 4), 1);
  EXPECT_EQ(oracle_ehk(fixtures::segment(1).lattice_polytope(), 7), 1);
}

TEST(Oracle, ConvergenceReport) {
  const PairSpec spec = PairSpec::leaf(fixtures::segment(2));
  const ConvergenceReport r = convergence_report(spec, make_rat(5, 4), {4, 8, 16, 32});
  ASSERT_TRUE(r.exact_value.has_value());
  EXPECT_EQ(*r.exact_value, 1);
  ASSERT_EQ(r.gaps.size(), 4u);
  for (std::size_t i = 0; i + 1 < r.gaps.size(); ++i) EXPECT_GT(r.gaps[i], r.gaps[i + 1]);
  ASSERT_TRUE(r.max_gap_tail.has_value());
  EXPECT_EQ(*r.max_gap_tail, r.gaps[2]);

  const std::string csv = convergence_csv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "q,m,count,f_value,exact_value,gap");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
}

TEST(Oracle, ConvergenceForSegreProduct) {
  const PairSpec seg = PairSpec::leaf(fixtures::segment(1));
  const PairSpec cube = PairSpec::segre(PairSpec::segre(seg, seg), seg);
  const ConvergenceReport r = convergence_report(cube, make_rat(1, 2), {2, 4});
  EXPECT_EQ(r.samples.size(), 2u);
  // Below degree q every lattice point of m P survives.
  EXPECT_EQ(r.samples[1].f_value, make_rat(27, 64));
  ASSERT_TRUE(r.exact_value.has_value());
  EXPECT_EQ(*r.exact_value, make_rat(1, 8));
}

}  // namespace
}  // namespace hk
