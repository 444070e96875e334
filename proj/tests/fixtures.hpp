#pragma once

// Polytopes shared by the unit tests and the acceptance binary.

#include <string>
#include <vector>

#include "hk/analysis.hpp"
#include "hk/toric_pair.hpp"

namespace hk::fixtures {

inline ToricPair from_ints(const std::vector<std::vector<long>>& vs) {
  std::vector<Point> pts;
  for (const auto& v : vs) pts.push_back(Point::from_ints(v));
  return ToricPair::from_vertices(pts);
}

inline ToricPair from_fan(const std::vector<std::vector<long>>& rays, const std::vector<long>& coeffs) {
  std::vector<Point> rs;
  for (const auto& r : rays) rs.push_back(Point::from_ints(r));
  return ToricPair::from_fan(rs, coeffs);
}

// O(n) on P^1.
inline ToricPair segment(long n) { return from_ints({{0}, {n}}); }

inline ToricPair square(long lo, long hi) {
  return from_ints({{lo, lo}, {hi, lo}, {hi, hi}, {lo, hi}});
}

inline ToricPair unit_triangle() { return from_ints({{0, 0}, {1, 0}, {0, 1}}); }

// Hirzebruch surface F_a with the divisor c D_1 + d D_4.
inline ToricPair hirzebruch(long a, long c, long d) {
  return from_ints({{-c, 0}, {0, 0}, {a * d, d}, {-c, d}});
}

inline ToricPair hexagon() {
  return from_ints({{2, 1}, {1, 2}, {-1, 1}, {-2, -1}, {-1, -2}, {1, -1}});
}

inline std::vector<long> ones(std::size_t n) { return std::vector<long>(n, 1); }

// Anticanonical polytopes of the five toric del Pezzo surfaces.
inline ToricPair fano_p1p1() { return square(-1, 1); }
inline ToricPair fano_p2() { return from_fan({{1, 0}, {0, 1}, {-1, -1}}, ones(3)); }
inline ToricPair fano_x3() { return from_fan({{1, 0}, {1, 1}, {0, 1}, {-1, -1}}, ones(4)); }
inline ToricPair fano_x4() {
  return from_fan({{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {-1, -1}}, ones(5));
}
inline ToricPair fano_x5() {
  return from_fan({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}, ones(6));
}

struct Named {
  std::string name;
  ToricPair pair;
};

inline std::vector<Named> fanos() {
  return {{"P1xP1", fano_p1p1()}, {"P2", fano_p2()}, {"X3", fano_x3()},
          {"X4", fano_x4()},      {"X5", fano_x5()}};
}

inline std::vector<Named> planar() {
  std::vector<Named> out = fanos();
  out.push_back({"unit_square", square(0, 1)});
  out.push_back({"unit_triangle", unit_triangle()});
  out.push_back({"hexagon", hexagon()});
  out.push_back({"F1(1,1)", hirzebruch(1, 1, 1)});
  out.push_back({"F2(1,3)", hirzebruch(2, 1, 3)});
  return out;
}

// Sum of c_i x^i.
inline Poly poly(std::vector<Rat> c) { return Poly(std::move(c)); }

}  // namespace hk::fixtures
