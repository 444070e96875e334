#pragma once

#include <vector>

#include "hk/geometry.hpp"

namespace hk {

struct Segment2 {
  Point a;
  Point b;
};

// Vertical decomposition of a planar segment arrangement. The edges of the
// bounding box of all endpoints are added, so the faces tile the box. Each
// face is a trapezoid (possibly a triangle) between two consecutive
// segments of a slab; no segment crosses its interior.
class Arrangement2D {
 public:
  struct Face {
    std::vector<Point> corners;  // counter-clockwise, duplicates removed
    Point rep;                   // interior point
    Rat area;
  };

  explicit Arrangement2D(std::vector<Segment2> segments);

  const std::vector<Segment2>& segments() const { return segments_; }
  const std::vector<Face>& faces() const { return faces_; }
  const Point& box_min() const { return lo_; }
  const Point& box_max() const { return hi_; }

 private:
  std::vector<Segment2> segments_;
  std::vector<Face> faces_;
  Point lo_, hi_;
};

}  // namespace hk
